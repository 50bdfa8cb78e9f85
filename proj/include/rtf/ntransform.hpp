// ntransform.hpp - N and N+ transforms on ideal monoids
#pragma once

#include "rtf/ideal.hpp"

#include <functional>

namespace rtf {

struct ArithFn {
    std::function<FormalLog(const Ideal&)> eval;
    // upward closed domain; empty means every integral ideal
    std::function<bool(const Ideal&)> in_domain;

    FormalLog operator()(const Ideal& m) const;
    bool contains(const Ideal& m) const { return !in_domain || in_domain(m); }

    static ArithFn constant(const Rational& c);
    static ArithFn norm_power(long t);   // N(m)^t, t integral
    static ArithFn log_norm();           // log N(m) as FormalLog
    static ArithFn from_table(std::map<Ideal, Rational> table);
};

class NonRationalPower : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Definition: signed, iota-weighted sum over I subset S(n1)
FormalLog n_transform(const ArithFn& B, const Ideal& n, bool parallel = true);
// same sum with every sign +1
FormalLog n_plus(const ArithFn& B, const Ideal& n, bool parallel = true);
// forward map: sum_{b | n1} omega(n, b^2) iota(n b^-2)/iota(n) A(n b^-2)
FormalLog convolve_omega(const ArithFn& A, const Ideal& n);

Rational closed_power(const Ideal& n, const Rational& t);
double closed_power_real(const Ideal& n, double t);
FormalLog closed_log(const Ideal& n);
Rational n_plus_closed(const Ideal& n, const Rational& t);
double n_plus_closed_real(const Ideal& n, double t);

// ratio N+[N^{-c+e}](p^{2k}) / N(p^{2k})^{-inf(c,1)+e}, k = 1..kmax
std::vector<double> nplus_bound_ratios(long q, double c, double e, int kmax);

}  // namespace rtf
