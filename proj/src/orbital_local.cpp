// orbital_local.cpp
#include "rtf/orbital_local.hpp"

#include "rtf/testfns.hpp"

#include <algorithm>
#include <cmath>

namespace rtf {

LocalPoint LocalPoint::make(int ordb, int ordb1) {
    if (ordb < 0 && ordb1 != ordb) throw std::invalid_argument("|b| > 1 forces ord(b+1) = ord(b)");
    if (ordb > 0 && ordb1 != 0) throw std::invalid_argument("b in p forces b+1 a unit");
    if (ordb == 0 && ordb1 < 0) throw std::invalid_argument("b a unit forces b+1 integral");
    return {ordb, ordb1};
}

LocalPoint LocalPoint::generic(int o) { return make(o, o < 0 ? o : 0); }

int lambda_v(const LocalPoint& b) { return b.integral() ? b.ord_bb1() + 1 : 0; }

long tau_S(const std::vector<std::pair<LocalPoint, int>>& places) {
    long t = 1;
    for (auto& [b, e] : places) {
        if (e > 0) t *= b.ordb >= -e ? 1 : 0;
        else t *= lambda_v(b);
    }
    return t;
}

Rational tilde_delta(int n, int ordb, int eta) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n > 0) {
        if (ordb <= -n) return 0;
        return Rational(eta_pow(eta, n) * eta_pow(eta, ordb) * (-n - ordb));
    }
    if (ordb <= 0) return 0;
    if (eta == 1) return Rational(-ordb * (ordb + 1)) / 2;
    // sign fixed by the shell integral it evaluates
    int eb = eta_pow(eta, ordb);
    return Rational(1 - eb) / 4 - Rational(ordb * eb) / 2;
}

Rational shell_level_sum(int l, int ordb, int eta) {
    // t = varpi^k u, k >= 0; the level of t is max(0, k - ord b)
    Rational s = 0;
    int kmax = std::max(0, ordb + l);
    for (int k = 0; k <= kmax; ++k)
        if (std::max(0, k - ordb) == l) s += eta_pow(eta, k) * (-k);
    return s;
}

ScaledLog hecke_profile(int l, int m, long q) {
    if (l > m || l < 0) return ScaledLog();
    if (l == m) return ScaledLog::half_power(q, -m) * Rational(-1);
    return ScaledLog::half_power(q, 2 - m) * Rational(m - l - 1) - ScaledLog::half_power(q, -m) * Rational(m - l + 1);
}

ScaledLog tilde_I_plus(int m, int ordb, long q, int eta, const Rational& vol) {
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    ScaledLog s = ScaledLog::half_power(q, -m) * (-tilde_delta(m, ordb, eta));
    for (int l = std::max(0, 1 - ordb); l <= m - 1; ++l) s += hecke_profile(l, m, q) * tilde_delta(l, ordb, eta);
    Rational pre = vol * (m == 0 ? 2 : 1);
    return s * ScaledLog(FormalLog::log_of(q, pre));
}

namespace {
// sum over shells k >= 0 of P(level) eta^k w(k)
template <class W>
ScaledLog shell_sum(int m, int ordb, long q, int eta, W&& weight) {
    ScaledLog s;
    int kmax = std::max(0, ordb + m);
    for (int k = 0; k <= kmax; ++k) {
        int l = std::max(0, k - ordb);
        Rational w = weight(k) * eta_pow(eta, k);
        if (w != 0) s += hecke_profile(l, m, q) * w;
    }
    return s;
}
}  // namespace

ScaledLog tilde_I_plus_shell(int m, int ordb, long q, int eta, const Rational& vol) {
    ScaledLog s = shell_sum(m, ordb, q, eta, [](int k) { return Rational(-k); });
    return s * ScaledLog(FormalLog::log_of(q, vol * (m == 0 ? 2 : 1)));
}

ScaledLog shell_iplus_oracle(int m, int ordx, long q, int eta, const Rational& vol) {
    if (ordx < -m) return ScaledLog();
    return shell_sum(m, ordx, q, eta, [](int) { return Rational(1); }) * Rational(vol * (m == 0 ? 2 : 1));
}

Rational delta0(int ordx, int eta) {
    Rational s = 0;
    for (int k = 0; k <= ordx; ++k) s += eta_pow(eta, k);
    return s;
}

ScaledLog W_hecke_basis(int m, const LocalPoint& b, long q, int eta, const IPlusOracle& iplus, const Rational& vol) {
    const int ordx = b.ordb1 - 1;
    if (m == 0) {
        Rational br = tilde_delta(0, b.ordb, eta) + eta * delta0(ordx, eta) - eta * tilde_delta(0, ordx, eta);
        return ScaledLog(FormalLog::log_of(q, -2 * vol * br));
    }
    if (!iplus) throw MissingOracle("I^+(m;x) for m > 0 needs an oracle");
    ScaledLog x = iplus(m, ordx, q, eta, vol) * ScaledLog(FormalLog::log_of(q)) - tilde_I_plus(m, ordx, q, eta, vol);
    return tilde_I_plus(m, b.ordb, q, eta, vol) + x * Rational(eta);
}

ScaledLog W_hecke_ideal(int n, const LocalPoint& b, long q, int eta, const IPlusOracle& iplus, const Rational& vol) {
    auto d = decompose_alpha(n);
    ScaledLog s;
    for (std::size_t m = 0; m < d.coeff.size(); ++m)
        if (d.coeff[m]) s += W_hecke_basis(int(m), b, q, eta, iplus, vol) * Rational(d.coeff[m]);
    // the constant 1 is alpha^(0)/2
    if (d.constant) s += W_hecke_basis(0, b, q, eta, iplus, vol) * (Rational(d.constant) / 2);
    return s;
}

double W_hecke_bound_shape(int m, const LocalPoint& b, long q) {
    const double lq = std::log(double(q));
    const double o = b.ord_bb1();
    if (m == 0) return b.ordb >= 0 ? lq * (o + 1) * (o + 1) : 0.0;
    if (b.ordb < -(m - 1)) return 0.0;
    return lq * std::pow(double(q), 1 - 0.5 * m) * m * (2 * m + o) * (2 * m + o);
}

double W_hecke_ideal_bound_shape(int n, const LocalPoint& b, long q) {
    if (b.ordb < -n) return 0.0;
    double o = b.ord_bb1() + 2 * n + 1;
    return std::log(double(q)) * double(q) * o * o;
}

FormalLog W_unramified(const LocalPoint& b, long q, int eta, const Rational& vol) {
    Rational lt = 0;
    if (b.ordb > 0) lt = tilde_delta(0, b.ordb, eta);
    else if (b.ordb1 > 0) lt = -tilde_delta(0, b.ordb1, eta);
    return FormalLog::log_of(q, vol * lt);
}

FormalLog W_unramified_oracle(const LocalPoint& b, long q, int eta, const Rational& vol) {
    // |b| <= |t| < 1 and 1 < |t| <= |b+1|^{-1}
    Rational s = 0;
    for (int k = 1; k <= b.ordb; ++k) s += eta_pow(eta, k) * (-k);
    for (int j = 1; j <= b.ordb1; ++j) s += eta_pow(eta, j) * j;
    return FormalLog::log_of(q, vol * s);
}

FormalLog W_level(const LocalPoint& b, int ordn, long q, int eta, const Rational& vol) {
    if (ordn < 1) throw std::invalid_argument("ord_v(n) must be >= 1");
    if (b.ordb < ordn) return FormalLog();
    const int o = b.ordb, N = ordn;
    Rational v;
    if (eta == 1) v = Rational((o + N) * (o - N + 1)) / 2;
    else v = Rational(N * eta_pow(eta, N) + o * eta_pow(eta, o)) / 2 + Rational(eta_pow(eta, o) - eta_pow(eta, N)) / 4;
    return FormalLog::log_of(q, -vol * v);
}

FormalLog W_level_oracle(const LocalPoint& b, int ordn, long q, int eta, const Rational& vol) {
    Rational s = 0;
    for (int n = ordn; n <= b.ordb; ++n) s += eta_pow(eta, n) * n;
    return FormalLog::log_of(q, -vol * s);
}

ScaledLog W_ramified(const LocalPoint& b, int f, long q, int eta_m1, int eta_bb1, int d_v) {
    if (f < 1) throw std::invalid_argument("f must be >= 1");
    if (b.ordb < -f) return ScaledLog();
    Rational inner;
    if (b.ordb > 0) inner = -f - b.ordb;
    else if (b.ordb == 0) inner = -f + b.ordb1;
    else inner = Rational(-f) * rpow(Rational(q), b.ordb);
    Rational br = -f + eta_bb1 * inner;
    Rational pre = Rational(eta_m1) * Rational(q) / (q - 1);
    return ScaledLog::half_power(q, -2 * f - d_v) * ScaledLog(FormalLog::log_of(q, pre * br));
}

double W_ramified_bound_shape(const LocalPoint& b, int f, long q) {
    if (b.ordb < -f) return 0.0;
    double br = f + (b.ordb >= 0 ? b.ord_bb1() : 0);
    return std::log(double(q)) * std::pow(double(q), -f) * br;
}

}  // namespace rtf
