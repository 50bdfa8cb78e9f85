// orbital_local.hpp - non-archimedean log-weighted orbital integrals W_v
#pragma once

#include "rtf/exact.hpp"

#include <functional>

namespace rtf {

class MissingOracle : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// b in F_v - {0,-1}, seen through ord_v(b) and ord_v(b+1)
struct LocalPoint {
    int ordb = 0;
    int ordb1 = 0;
    static LocalPoint make(int ordb, int ordb1);  // throws on ultrametric inconsistency
    // the point with ord b = o and the generic ord(b+1) (0 for o > 0, o for o < 0)
    static LocalPoint generic(int o);
    bool integral() const { return ordb >= 0; }
    int ord_bb1() const { return ordb + ordb1; }
};

int lambda_v(const LocalPoint& b);
// places listed as (point, ord_v(bset)); unlisted places contribute Lambda_v = 1
long tau_S(const std::vector<std::pair<LocalPoint, int>>& places);

// unramified eta_v: eta_v(b) = eta^{ord b}
inline int eta_pow(int eta, int k) { return (eta == -1 && (k % 2 != 0)) ? -1 : 1; }

Rational tilde_delta(int n, int ordb, int eta);
// the shell integral over {|t| <= 1, sup(1, |b|/|t|) = q^l} of eta(t) log|t| in units of vol log q
Rational shell_level_sum(int l, int ordb, int eta);
// Phi-hat profile value at level l for alpha^(m), without the 2^{delta(m=0)}
ScaledLog hecke_profile(int l, int m, long q);

ScaledLog tilde_I_plus(int m, int ordb, long q, int eta, const Rational& vol = 1);
ScaledLog tilde_I_plus_shell(int m, int ordb, long q, int eta, const Rational& vol = 1);

// I_v^+(m; x) supplied from outside; arguments (m, ord x, q, eta, vol)
using IPlusOracle = std::function<ScaledLog(int, int, long, int, const Rational&)>;
// reconstruction: the shell sum of tilde_I_plus_shell without the log weight
ScaledLog shell_iplus_oracle(int m, int ordx, long q, int eta, const Rational& vol);
// delta_0(x) = delta(|x| <= 1) sum_{k=0}^{ord x} eta^k
Rational delta0(int ordx, int eta);

ScaledLog W_hecke_basis(int m, const LocalPoint& b, long q, int eta, const IPlusOracle& iplus,
                        const Rational& vol = 1);
// alpha_{p^n} through its alpha^(m) decomposition
ScaledLog W_hecke_ideal(int n, const LocalPoint& b, long q, int eta, const IPlusOracle& iplus,
                        const Rational& vol = 1);
double W_hecke_bound_shape(int m, const LocalPoint& b, long q);
double W_hecke_ideal_bound_shape(int n, const LocalPoint& b, long q);

FormalLog W_unramified(const LocalPoint& b, long q, int eta, const Rational& vol = 1);
FormalLog W_unramified_oracle(const LocalPoint& b, long q, int eta, const Rational& vol = 1);

FormalLog W_level(const LocalPoint& b, int ordn, long q, int eta, const Rational& vol = 1);
FormalLog W_level_oracle(const LocalPoint& b, int ordn, long q, int eta, const Rational& vol = 1);

// eta_m1 = eta_v(-1), eta_bb1 = eta_v(b(b+1)) (caller supplied), d_v = local different exponent
ScaledLog W_ramified(const LocalPoint& b, int f, long q, int eta_m1, int eta_bb1, int d_v = 0);
double W_ramified_bound_shape(const LocalPoint& b, int f, long q);

}  // namespace rtf
