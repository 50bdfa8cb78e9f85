// spectral.hpp - local spectral weights Q_j, tau(j,j), r^(z), partial r, w and dw
#pragma once

#include "rtf/ideal.hpp"

#include <complex>
#include <optional>

namespace rtf {

class SingularTau : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class InertViolation : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Local representation datum at a place with residue cardinality q.
// c = 0: Q = (a + 1/a)/(q^{1/2} + q^{-1/2}); c = 1: chi = chi(varpi); c >= 2: nothing.
template <class T>
struct LocalRep {
    int c = 0;
    long q = 2;
    T Q = T(0);
    int chi = 1;
};

using LocalRepData = LocalRep<Rational>;

inline constexpr int kMaxK = 64;

namespace detail {
template <class T>
T ipow(T x, int e) {
    T r = T(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}
template <class T>
void check_rep(const LocalRep<T>& rep) {
    if (rep.c < 0) throw std::invalid_argument("conductor exponent must be >= 0");
    if (rep.c == 0 && (rep.Q == T(1) || rep.Q == T(-1)))
        throw SingularTau("1 - Q^2 = 0");
    if (rep.c == 1 && rep.chi != 1 && rep.chi != -1) throw std::invalid_argument("chi must be +-1");
}
}  // namespace detail

// Q_j(eta, X); the c = 0, j >= 2 case uses (a q^{1/2} eta X - 1)(a^{-1} q^{1/2} eta X - 1)
// = q X^2 - (q+1) Q eta X + 1
template <class T>
T q_poly(int j, const LocalRep<T>& rep, int eta, T X) {
    if (j < 0) throw std::invalid_argument("j must be >= 0");
    const T q = T(rep.q), e = T(eta);
    if (j == 0) return T(1);
    if (rep.c >= 2) return detail::ipow(T(e * X), j);
    if (rep.c == 1)
        return detail::ipow(T(e * X), j - 1) * (e * X - T(rep.chi) / q);
    if (j == 1) return e * X - rep.Q;
    return detail::ipow(T(e * X), j - 2) * (q * X * X - (q + T(1)) * rep.Q * e * X + T(1)) / q;
}

template <class T>
T tau_jj(int j, const LocalRep<T>& rep) {
    if (j < 0) throw std::invalid_argument("j must be >= 0");
    const T q = T(rep.q);
    if (j == 0 || rep.c >= 2) return T(1);
    if (rep.c == 1) return T(1) - T(1) / (q * q);
    if (j == 1) return T(1) - rep.Q * rep.Q;
    return (T(1) - rep.Q * rep.Q) * (T(1) - T(1) / (q * q));
}

// defining sum: sum_{j<=k} conj(Q_j(1,1)) Q_j(eta,X) / tau(j,j); Q_j(1,1) is real
template <class T>
T r_z_sum(const LocalRep<T>& rep, int eta, int k, T X) {
    detail::check_rep(rep);
    if (k < 1 || k > kMaxK) throw std::invalid_argument("k out of range");
    T s = T(0);
    for (int j = 0; j <= k; ++j) s += q_poly(j, rep, 1, T(1)) * q_poly(j, rep, eta, X) / tau_jj(j, rep);
    return s;
}

template <class T>
T r_z_closed(const LocalRep<T>& rep, int eta, int k, T X) {
    detail::check_rep(rep);
    if (k < 1 || k > kMaxK) throw std::invalid_argument("k out of range");
    const T q = T(rep.q), one = T(1);
    // (1 +- a q^{1/2} X)(1 +- a^{-1} q^{1/2} X) = 1 +- (q+1) Q X + q X^2
    if (eta == -1) {
        if (rep.c >= 2) return (one + T(k % 2 ? -1 : 1) * detail::ipow(X, k + 1)) / (one + X);
        if (rep.c == 1) {
            T cq = T(rep.chi) / q;
            return one - (X + cq) / (one + cq) * (one - T(k % 2 ? -1 : 1) * detail::ipow(X, k)) / (one + X);
        }
        T pre = one + (q + one) * rep.Q * X + q * X * X;
        return (one - X) / (one + rep.Q) +
               pre / ((q - one) * (one + rep.Q)) * (one - detail::ipow(T(-X), k - 1)) / (one + X);
    }
    if (rep.c >= 2) {
        T s = T(0);
        for (int j = 0; j <= k; ++j) s += detail::ipow(X, j);
        return s;
    }
    if (rep.c == 1) {
        // sum_{j=1}^k X^{j-1}, as the defining sum gives
        T cq = T(rep.chi) / q, s = T(0);
        for (int j = 1; j <= k; ++j) s += detail::ipow(X, j - 1);
        return one + (X - cq) / (one + cq) * s;
    }
    T pre = one - (q + one) * rep.Q * X + q * X * X, s = T(0);
    for (int j = 2; j <= k; ++j) s += detail::ipow(X, j - 2);
    return (one + X) / (one + rep.Q) + pre / ((q - one) * (one + rep.Q)) * s;
}

// partial r = -(1/log q) d/dz r^(z) at z = 1/2
template <class T>
T partial_r(const LocalRep<T>& rep, int eta, int k) {
    detail::check_rep(rep);
    if (k < 1 || k > kMaxK) throw std::invalid_argument("k out of range");
    const T q = T(rep.q), one = T(1), kk = T(k);
    const T sgn = T(k % 2 ? -1 : 1);
    if (eta == -1) {
        if (rep.c >= 2) return (sgn * (T(2) * kk + one) - one) / T(4);
        if (rep.c == 1) {
            T cq = T(rep.chi) / q;
            return -(one - sgn) / T(2) / (one + cq) + (one + sgn * (T(2) * kk - one)) / T(4);
        }
        return -one / (one + rep.Q) +
               (one + sgn) / T(2) * (T(2) * q + (q + one) * rep.Q) / ((q - one) * (one + rep.Q)) +
               (sgn * (T(2) * kk - T(3)) - one) / T(4) * (q + one) / (q - one);
    }
    if (rep.c >= 2) return kk * (kk + one) / T(2);
    if (rep.c == 1) {
        T cq = T(rep.chi) / q;
        return (kk + (one - cq) * kk * (kk - one) / T(2)) / (one + cq);
    }
    return one / (one + rep.Q) + (kk - one) * (T(2) * q - (q + one) * rep.Q) / ((q - one) * (one + rep.Q)) +
           (kk - T(2)) * (kk - one) / T(2) * (q + one) * (one - rep.Q) / ((q - one) * (one + rep.Q));
}

// r^(z) at complex z with X = q^{1/2 - z} on the principal branch
std::complex<double> r_z_at(const LocalRep<double>& rep, int eta, int k, std::complex<double> z);

// Q from a unit-circle Satake parameter a
double satake_Q(std::complex<double> a, long q);

struct WeightValue {
    Rational w;
    FormalLog dw;
};

// pi: local data at every prime of S(n f_pi^{-1}); c of each entry = ord_v(f_pi)
using PiData = std::map<Prime, LocalRepData>;

WeightValue w_and_dw(const PiData& pi, const Ideal& f_pi, const Ideal& n, const QuadCharData& eta);
// product / product-rule oracle: prod r_v and sum_v (-log q_v) partial r_v prod_{w != v} r_w
WeightValue w_and_dw_product(const PiData& pi, const Ideal& f_pi, const Ideal& n, const QuadCharData& eta);

// -(1/2)(log N f_pi + 2 log N f_eta + 2 log D)
FormalLog adl_plus_factor(const Ideal& f_pi, const Ideal& f_eta);

}  // namespace rtf
