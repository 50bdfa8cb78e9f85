// testfns.cpp
#include "rtf/testfns.hpp"

#include "rtf/parallel.hpp"

#include <cmath>
#include <numbers>

namespace rtf {

using cd = std::complex<double>;

double chebyshev(int n, double x) {
    if (n < 0) return 0;
    double a = 1, b = x;
    if (n == 0) return a;
    for (int i = 1; i < n; ++i) {
        double c = x * b - a;
        a = b;
        b = c;
    }
    return b;
}

cd chebyshev(int n, cd x) {
    if (n < 0) return 0;
    cd a = 1, b = x;
    if (n == 0) return a;
    for (int i = 1; i < n; ++i) {
        cd c = x * b - a;
        a = b;
        b = c;
    }
    return b;
}

cd LocalTestFn::operator()(cd z) const {
    if (kind == Basis) return std::pow(z, n) + std::pow(z, -n);
    return chebyshev(n, z + 1.0 / z);
}

AlphaDecomposition decompose_alpha(int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    AlphaDecomposition d;
    d.coeff.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int m = 0; m <= n / 2; ++m) d.coeff[static_cast<std::size_t>(n - 2 * m)] += 1;
    d.constant = n % 2 == 0 ? -1 : 0;
    return d;
}

std::map<int, long> laurent_hecke(int n) {
    // X_n(z + 1/z) = z^n + z^{n-2} + ... + z^{-n}
    std::map<int, long> out;
    for (int j = 0; j <= n; ++j) out[n - 2 * j] += 1;
    return out;
}

std::map<int, long> laurent_decomposition(const AlphaDecomposition& d) {
    std::map<int, long> out;
    for (std::size_t m = 0; m < d.coeff.size(); ++m) {
        if (!d.coeff[m]) continue;
        out[int(m)] += d.coeff[m];
        out[-int(m)] += d.coeff[m];
    }
    if (d.constant) out[0] += d.constant;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

namespace {
void check_eta(int eta) {
    if (eta != 1 && eta != -1) throw std::invalid_argument("eta value must be +-1");
}
long floor_half(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
}  // namespace

UnipMoment unip_moments(long q, int eta, int n) {
    check_eta(eta);
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    ScaledLog h = ScaledLog::half_power(q, -n);
    Rational u = eta == -1 ? Rational(n % 2 == 0 ? -1 : 0) : Rational(-(n + 1));
    Rational du = eta == -1 ? Rational((n % 2 ? -1 : 1) * floor_half(n + 1)) : Rational(Rational(n * (n + 1)) / 2);
    du.canonicalize();
    return {h * u, h * ScaledLog(FormalLog::log_of(q, du))};
}

ScaledLog dunip(long q, int eta, int m) {
    check_eta(eta);
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (m == 0) return ScaledLog();
    Rational Q = q, sg = m % 2 ? -1 : 1, br;
    if (eta == -1) br = (Q - 1) / 2 * m * sg - (3 * Q + 1) / 4 * sg + (1 - Q) / 4;
    else br = Rational((m - 1) * (m - 2)) / 2 * Q - Rational(m * (m + 1)) / 2;
    return ScaledLog::half_power(q, -m) * ScaledLog(FormalLog::log_of(q, -br));
}

double unip_U(long q, int eta, int n) { return unip_moments(q, eta, n).U.eval(); }
double unip_dU(long q, int eta, int n) { return unip_moments(q, eta, n).dU.eval(); }
double dunip_value(long q, int eta, int m) { return dunip(q, eta, m).eval(); }

cd unip_kernel(UnipKernel k, long q, int eta, cd s) {
    const double lq = std::log(double(q));
    const cd Y = std::exp(0.5 * (s + 1.0) * lq);  // q^{(s+1)/2}
    const double e = eta;
    switch (k) {
        case UnipKernel::Upsilon:
            return 1.0 / ((1.0 - e / Y) * (1.0 - Y));
        case UnipKernel::UpsilonOverUnip:
            return lq / ((1.0 - e / Y) * (1.0 - Y) * (1.0 - e * Y));
        case UnipKernel::DunipKernel:
            return e * lq / ((1.0 - e / Y) * (1.0 - e / Y) * (1.0 - 1.0 / Y) * Y * Y);
    }
    return 0;
}

cd period_trapezoid(UnipKernel k, long q, int eta, const LocalTestFn& alpha, double sigma, long steps,
                    bool parallel) {
    const double lq = std::log(double(q));
    const double T = 4 * std::numbers::pi / lq;
    const double h = T / double(steps);
    auto f = [&](std::int64_t j) {
        cd s(sigma, h * double(j));
        cd z = std::exp(0.5 * s * lq);
        cd dmu = 0.5 * lq * (std::exp(0.5 * (1.0 + s) * lq) - std::exp(0.5 * (1.0 - s) * lq));
        return unip_kernel(k, q, eta, s) * alpha(z) * dmu;
    };
    // (1/2 pi i) ds = dt / 2 pi
    return blocked_sum<cd>(0, steps, f, parallel) * (h / (2 * std::numbers::pi));
}

cd period_integral(UnipKernel k, long q, int eta, const LocalTestFn& alpha, const PeriodOptions& opt) {
    check_eta(eta);
    if (opt.sigma <= 0) throw std::invalid_argument("sigma must be > 0");
    if (opt.steps < 1024) throw std::invalid_argument("steps must be >= 2^10");
    long n = opt.steps;
    cd prev = period_trapezoid(k, q, eta, alpha, opt.sigma, n, opt.parallel);
    for (int it = 0; it < 8; ++it) {
        n *= 2;
        cd cur = period_trapezoid(k, q, eta, alpha, opt.sigma, n, opt.parallel);
        if (std::abs(cur - prev) <= opt.tol) return cur;
        prev = cur;
    }
    throw ConvergenceError("period integral did not settle");
}

double mu_density(long q, int eta, double x) {
    check_eta(eta);
    double sq = std::sqrt(double(q)), t = sq + 1 / sq;
    if (eta == 1) return (q - 1) / ((t - x) * (t - x));
    return (q + 1) / (t * t - x * x);
}

namespace {
// (2/pi) int_0^pi g(theta) d theta for g vanishing at both ends; trapezoid on the even periodic extension
template <class G>
double theta_trapezoid(G&& g, long steps, bool parallel) {
    const double h = std::numbers::pi / double(steps);
    double s = blocked_sum<double>(1, steps, [&](std::int64_t j) { return g(h * double(j)); }, parallel);
    return s * h * 2 / std::numbers::pi;
}
}  // namespace

double st_moment(long q, int eta, int n, long steps, bool parallel) {
    check_eta(eta);
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    auto g = [&](double th) { return std::sin((n + 1) * th) * std::sin(th) * mu_density(q, eta, 2 * std::cos(th)); };
    if (steps > 0) return theta_trapezoid(g, steps, parallel);
    long m = 64;
    double prev = theta_trapezoid(g, m, parallel);
    for (; m < (1L << 22);) {
        m *= 2;
        double cur = theta_trapezoid(g, m, parallel);
        if (std::fabs(cur - prev) <= 1e-14 * std::max(1.0, std::fabs(cur))) return cur;
        prev = cur;
    }
    throw ConvergenceError("moment quadrature did not settle");
}

double st_moment_expected(long q, int eta, int n) {
    double p = std::pow(double(q), -0.5 * n);
    if (eta == -1) return n % 2 ? 0.0 : p;
    return (n + 1) * p;
}

double cheb_coefficient(const std::function<double(double)>& chi, int n, long steps) {
    auto g = [&](double th) { return chi(2 * std::cos(th)) * std::sin((n + 1) * th) * std::sin(th); };
    return theta_trapezoid(g, steps, false);
}

ChebTruncation cheb_truncate(const std::function<double(double)>& chi, int M, int grid) {
    ChebTruncation out;
    for (int n = 0; n <= M; ++n) out.coeff.push_back(cheb_coefficient(chi, n));
    for (int i = 0; i < grid; ++i) {
        double x = -2 + 4.0 * i / (grid - 1);
        double s = 0;
        for (int n = 0; n <= M; ++n) s += out.coeff[static_cast<std::size_t>(n)] * chebyshev(n, x);
        out.sup_error = std::max(out.sup_error, std::fabs(chi(x) - s));
    }
    return out;
}

}  // namespace rtf
