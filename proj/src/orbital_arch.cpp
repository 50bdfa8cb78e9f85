// orbital_arch.cpp
#include "rtf/orbital_arch.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace rtf {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double legendre(int n, double x) {
    if (n < 0) throw std::invalid_argument("Legendre degree must be >= 0");
    double p0 = 1, p1 = x;
    if (n == 0) return p0;
    for (int j = 1; j < n; ++j) {
        double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

namespace {
void check_weight(int k) {
    if (k < 4 || k % 2) throw std::invalid_argument("weight must be even and >= 4");
}
void check_point(double b) {
    if (std::fabs(b) < kDeltaCut || std::fabs(b + 1) < kDeltaCut)
        throw DomainError("b within the exclusion radius of {0,-1}");
}
}  // namespace

SeriesValue gauss_2f1_series(int k, double x) {
    if (std::fabs(x) > 0.5) throw DomainError("series branch needs |x| <= 1/2");
    const double a = k / 2.0, c = k;
    double term = 1, sum = 1;
    // beyond n0 the term ratio is at most |x|
    const int n0 = static_cast<int>(std::ceil(a * a - 2 * a));
    for (int n = 0; n < 10000; ++n) {
        term *= (a + n) * (a + n) / ((c + n) * (n + 1)) * x;
        sum += term;
        if (n + 1 >= n0) {
            double tail = std::fabs(term) * std::fabs(x) / (1 - std::fabs(x));
            if (tail <= 1e-17 * std::fabs(sum)) return {sum, tail, n + 2};
        }
    }
    throw ConvergenceError("2F1 series did not converge");
}

namespace {
// A&S 15.3.10 with a = b = k/2, c = a + b
double gauss_2f1_log(int k, double x) {
    const double a = k / 2.0, y = 1 - x, ly = std::log(y);
    double coef = 1, sum = 0;
    for (int n = 0; n < 10000; ++n) {
        if (n > 0) coef *= (a + n - 1) * (a + n - 1) / (double(n) * n) * y;
        double br = 2 * boost::math::digamma(n + 1.0) - 2 * boost::math::digamma(a + n) - ly;
        double t = coef * br;
        sum += t;
        if (n > 2 && std::fabs(t) <= 1e-17 * std::fabs(sum)) break;
    }
    return std::exp(std::lgamma(2 * a) - 2 * std::lgamma(a)) * sum;
}
}  // namespace

double gauss_2f1(int k, double x) {
    if (k % 2 || k < 0) throw std::invalid_argument("k must be even and >= 0");
    if (k == 0) return 1;
    if (x >= 1 || 1 - x < kDeltaCut) throw DomainError("2F1 argument at the logarithmic point");
    if (std::fabs(x) <= 0.5) return gauss_2f1_series(k, x).value;
    if (x > 0.5) return gauss_2f1_log(k, x);
    // Pfaff: F(a,a;2a;x) = (1-x)^{-a} F(a,a;2a;x/(x-1))
    return std::pow(1 - x, -k / 2.0) * gauss_2f1(k, x / (x - 1));
}

double j_one_direct(int k, double b) {
    check_weight(k);
    check_point(b);
    if (b * (b + 1) > 0) {
        double pre = std::pow(1 + b, -k / 2) * 2 * std::exp(2 * std::lgamma(k / 2.0) - std::lgamma(double(k)));
        return pre * gauss_2f1(k, 1 / (b + 1));
    }
    double s = 2 * std::log(std::fabs((b + 1) / b)) * legendre(k / 2 - 1, 2 * b + 1);
    for (int m = 1; m <= k / 4; ++m)
        s -= 8.0 * (k - 4 * m + 1) / ((2 * m - 1) * (k - 2 * m)) * legendre(k / 2 - 2 * m, 2 * b + 1);
    return s;
}

cd j_arch(int k, double b, ArchChar eps) {
    check_weight(k);
    check_point(b);
    if (eps == ArchChar::Sign) {
        if (b * (b + 1) > 0) return 0;
        return cd(0, 2 * kPi * legendre(k / 2 - 1, 2 * b + 1));
    }
    if (b < -1) return ((k / 2) % 2 ? -1.0 : 1.0) * j_one_direct(k, -b - 1);
    return j_one_direct(k, b);
}

cd j_plus(int l, double b) { return (j_arch(l, b, ArchChar::Trivial) + j_arch(l, b, ArchChar::Sign)) / 2.0; }

WPlusParts w_plus_parts(int l, double b) {
    check_weight(l);
    check_point(b);
    // the double sums cancel down to O((1+|b|)^{-l/2}) from O(|b|^{l/2-1}); 50 digits keep W accurate
    using R = boost::multiprecision::cpp_bin_float_50;
    using boost::math::binomial_coefficient;
    const int h = l / 2;
    const R pi = boost::math::constants::pi<R>();
    const R bb = b, b1 = R(b) + 1;
    const R th = b * (b + 1) < 0 ? pi / 2 : 3 * pi / 2;
    const R Lg = log(abs(bb / b1));
    R A = 0, B = 0;
    for (int k = 0; k < h; ++k) {
        const R c1 = binomial_coefficient<double>(h + k - 1, k);
        const R bk = pow(bb, k), sk = ((k + h) % 2 ? -1 : 1) * pow(b1, k);
        const R c2 = binomial_coefficient<double>(h - 1, k);
        A += c1 * c2 * (bk / 2 * Lg * Lg - th * th / 2 * bk - 9 * pi * pi / 8 * sk);
        B += c1 * c2 * bk * Lg * th;
        R Hm = 0;
        for (int j = 1; j <= h - k - 1; ++j) {
            if (j > 1) Hm += R(1) / (j - 1);
            const R c3 = c1 * R(binomial_coefficient<double>(h - 1, k + j)) * (j % 2 ? -1 : 1) / j;
            A += c3 * (Hm * (bk + sk) - bk * Lg);
            B -= c3 * (3 * pi / 2 * sk + bk * th);
        }
    }
    WPlusParts p{static_cast<double>(A), static_cast<double>(B), static_cast<double>(th), j_plus(l, b), 0};
    p.W = cd(0, -kPi) * p.Jplus - p.A - cd(0, 1) * p.B;
    return p;
}

cd w_plus(int l, double b) { return w_plus_parts(l, b).W; }

cd w_eps(int l, double b, ArchChar eps) {
    cd w = w_plus(l, b);
    double em1 = eps == ArchChar::Sign ? -1 : 1;
    return w + em1 * std::conj(w);
}

namespace {
QuadValue defining_integral(int l, double b, double tol, bool with_log) {
    check_weight(l);
    check_point(b);
    const int h = l / 2;
    const cd pre = std::pow(cd(0, 1), h) * std::pow(1 + b, -h);
    const cd beta(0, b / (b + 1));
    auto f = [&](double t) {
        if (t <= 0 || !std::isfinite(t)) return cd(0);
        cd v;
        if (t <= 1) {
            v = std::pow(cd(t, 1), -h) * std::pow(t + beta, -h) * std::pow(t, h - 1);
        } else {
            // t^{-h-1} (1 + i/t)^{-h} (1 + beta/t)^{-h}, no overflow for large t
            double it = 1 / t;
            v = std::pow(it, h + 1) * std::pow(cd(1, it), -h) * std::pow(1.0 + beta * it, -h);
        }
        return with_log ? v * std::log(t) : v;
    };
    boost::math::quadrature::tanh_sinh<double> ts;
    boost::math::quadrature::exp_sinh<double> es;
    double e1, e2, e3, e4, l1, l2;
    double re = ts.integrate([&](double t) { return f(t).real(); }, 0.0, 1.0, tol, &e1, &l1);
    double im = ts.integrate([&](double t) { return f(t).imag(); }, 0.0, 1.0, tol, &e2, &l2);
    double re2 = es.integrate([&](double t) { return f(1 + t).real(); }, tol, &e3, &l1);
    double im2 = es.integrate([&](double t) { return f(1 + t).imag(); }, tol, &e4, &l2);
    cd v = pre * cd(re + re2, im + im2);
    double err = std::abs(pre) * (e1 * std::fabs(re) + e2 * std::fabs(im) + e3 * std::fabs(re2) + e4 * std::fabs(im2));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ConvergenceError("W_+ quadrature failed");
    return {v, err};
}
}  // namespace

QuadValue w_plus_quad(int l, double b, double tol) { return defining_integral(l, b, tol, true); }
QuadValue j_plus_quad(int l, double b, double tol) { return defining_integral(l, b, tol, false); }

BoundFit arch_bound_fit(const std::function<double(double)>& F, int k, double e, double bmax, int per_decade) {
    std::vector<double> grid;
    for (double x = 1e-3; x <= bmax * (1 + 1e-12); x *= std::pow(10.0, 1.0 / per_decade)) {
        grid.push_back(x);
        grid.push_back(-x);
        grid.push_back(-1 - x);
        grid.push_back(-1 + x);
    }
    BoundFit fit;
    double outer = 0, inner = 0;
    for (double b : grid) {
        if (std::fabs(b) < 1e-6 || std::fabs(b + 1) < 1e-6) continue;
        double r = std::pow(std::fabs(b * (b + 1)), e) * std::fabs(F(b)) / std::pow(1 + std::fabs(b), -k / 2.0 + 2 * e);
        fit.C = std::max(fit.C, r);
        double ab = std::fabs(b);
        if (ab > bmax / 10) outer = std::max(outer, r);
        else if (ab > bmax / 100) inner = std::max(inner, r);
    }
    fit.outer_growth = inner > 0 ? outer / inner : 0;
    return fit;
}

}  // namespace rtf
