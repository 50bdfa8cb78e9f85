// testfns.hpp - Chebyshev test functions, unipotent moments, period integrals, local measures
#pragma once

#include "rtf/exact.hpp"

#include <complex>
#include <functional>

namespace rtf {

class ConvergenceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

double chebyshev(int n, double x);
std::complex<double> chebyshev(int n, std::complex<double> x);

// local test function at one place: alpha^(m)(s) = z^m + z^-m, or alpha_{p^n}(s) = X_n(z + 1/z); z = q^{s/2}
struct LocalTestFn {
    enum Kind { Basis, Hecke } kind = Hecke;
    int n = 0;
    std::complex<double> operator()(std::complex<double> z) const;
    static LocalTestFn basis(int m) { return {Basis, m}; }
    static LocalTestFn hecke(int n) { return {Hecke, n}; }
};

// alpha_{p^n} = sum_m coeff[m] alpha^(m) + constant
struct AlphaDecomposition {
    std::vector<int> coeff;
    int constant = 0;
};
AlphaDecomposition decompose_alpha(int n);
// Laurent coefficients (exponent -> coeff) of both sides, for the identity check
std::map<int, long> laurent_hecke(int n);
std::map<int, long> laurent_decomposition(const AlphaDecomposition& d);

struct UnipMoment {
    ScaledLog U;   // rational multiple of q^{-n/2}
    ScaledLog dU;  // q^{-n/2} log q * rational
};
UnipMoment unip_moments(long q, int eta, int n);
ScaledLog dunip(long q, int eta, int m);
// the same closed forms as doubles
double unip_U(long q, int eta, int n);
double unip_dU(long q, int eta, int n);
double dunip_value(long q, int eta, int m);

enum class UnipKernel { Upsilon, UpsilonOverUnip, DunipKernel };
std::complex<double> unip_kernel(UnipKernel k, long q, int eta, std::complex<double> s);

struct PeriodOptions {
    double sigma = 1.0;
    long steps = 1024;
    double tol = 1e-9;
    bool parallel = true;
};
// (1/2 pi i) int kernel * alpha * dmu over one vertical period, trapezoidal, doubled until two refinements agree
std::complex<double> period_integral(UnipKernel k, long q, int eta, const LocalTestFn& alpha,
                                     const PeriodOptions& opt = {});
// one fixed-step evaluation (no refinement); serial path kept for the benchmark/reference
std::complex<double> period_trapezoid(UnipKernel k, long q, int eta, const LocalTestFn& alpha, double sigma,
                                      long steps, bool parallel);

// density of mu_{v,eta} against dmu^ST, and the moment int X_n dmu_{v,eta}
double mu_density(long q, int eta, double x);
double st_moment(long q, int eta, int n, long steps = 0, bool parallel = true);
// candidate closed values of the moments: q^{-n/2} delta(n even) and (n+1) q^{-n/2}
double st_moment_expected(long q, int eta, int n);

struct ChebTruncation {
    std::vector<double> coeff;  // c^(0..M)
    double sup_error = 0;       // max |chi - chi^M| on the grid
};
// chi^M = sum_{n<=M} c^(n) X_n with c^(n) = int chi X_n dmu^ST
ChebTruncation cheb_truncate(const std::function<double(double)>& chi, int M, int grid = 2001);
double cheb_coefficient(const std::function<double(double)>& chi, int n, long steps = 4096);

}  // namespace rtf
