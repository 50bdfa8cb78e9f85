// orbital_arch.hpp - archimedean orbital integrals and their special functions
#pragma once

#include "rtf/ideal.hpp"
#include "rtf/testfns.hpp"

#include <complex>

namespace rtf {

inline constexpr double kDeltaCut = 1e-9;

double legendre(int n, double x);
// 2F1(k/2, k/2; k; x) for even k, x < 1, |1 - x| >= kDeltaCut
double gauss_2f1(int k, double x);
// plain power series with its tail bound; only for |x| <= 1/2
struct SeriesValue {
    double value;
    double tail_bound;
    int terms;
};
SeriesValue gauss_2f1_series(int k, double x);

enum class ArchChar { Trivial, Sign };

// J^eps(k; b); for b < -1 the trivial-character value goes through J(k;b) = (-1)^{k/2} J(k;-b-1)
std::complex<double> j_arch(int k, double b, ArchChar eps);
// the trivial-character value straight from 2F1 (Pfaff branch for b < -1), used to test the functional equation
double j_one_direct(int k, double b);
std::complex<double> j_plus(int l, double b);

struct WPlusParts {
    double A, B, theta;
    std::complex<double> Jplus, W;
};
WPlusParts w_plus_parts(int l, double b);
std::complex<double> w_plus(int l, double b);
// W^eps(b) = W_+(b) + eps(-1) conj(W_+(b))
std::complex<double> w_eps(int l, double b, ArchChar eps);

struct QuadValue {
    std::complex<double> value;
    double error;
};
// the defining log-integral, split at t = 1
QuadValue w_plus_quad(int l, double b, double tol = 1e-12);
// the same integral without log t (checks the J_+ normalisation)
QuadValue j_plus_quad(int l, double b, double tol = 1e-12);

struct BoundFit {
    double C = 0;           // sup of the normalised ratio over the grid
    double outer_growth = 0;  // sup over the last decade / sup over the previous one
};
// |b(b+1)|^e |F(b)| <= C (1+|b|)^{-k/2+2e} over a log-spaced grid on [-bmax, bmax]
BoundFit arch_bound_fit(const std::function<double(double)>& F, int k, double e, double bmax = 1e3,
                        int per_decade = 40);

}  // namespace rtf
