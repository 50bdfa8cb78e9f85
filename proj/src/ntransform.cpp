// ntransform.cpp
#include "rtf/ntransform.hpp"

#include <cmath>
#include <gmp.h>
#include <memory>

namespace rtf {

FormalLog ArithFn::operator()(const Ideal& m) const {
    if (!contains(m)) throw DomainError("ideal " + m.str() + " outside the function's domain");
    return eval(m);
}

ArithFn ArithFn::constant(const Rational& c) {
    return {[c](const Ideal&) { return FormalLog(c); }, {}};
}

ArithFn ArithFn::norm_power(long t) {
    return {[t](const Ideal& m) { return FormalLog(rpow(Rational(m.norm()), t)); }, {}};
}

ArithFn ArithFn::log_norm() {
    return {[](const Ideal& m) {
                FormalLog f;
                for (auto& [p, e] : m.exps()) f += FormalLog::log_of(p.q, e);
                return f;
            },
            {}};
}

ArithFn ArithFn::from_table(std::map<Ideal, Rational> table) {
    auto tab = std::make_shared<std::map<Ideal, Rational>>(std::move(table));
    return {[tab](const Ideal& m) { return FormalLog(tab->at(m)); },
            [tab](const Ideal& m) { return tab->count(m) > 0; }};
}

namespace {

FormalLog subset_sum(const ArithFn& B, const Ideal& n, bool signed_sum, bool parallel) {
    auto [n0, n1] = square_decompose(n);
    std::vector<Prime> S;
    for (auto& kv : n1.exps()) S.push_back(kv.first);
    const std::size_t k = S.size();
    const Rational in = iota(n);
    const long long count = 1LL << k;

    auto term = [&](long long mask) {
        Ideal m = n;
        Rational w = 1;
        int sz = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            ++sz;
            m = m.quotient(Ideal::prime(S[i], 2));
            if (n1.ord(S[i]) == 1) w *= omega_v(S[i], n0);
        }
        if (signed_sum && sz % 2) w = -w;
        w *= iota(m) / in;
        return B(m) * w;
    };

    // exact reduction: order of accumulation cannot change the result
    if (!parallel || count < 64) {
        FormalLog acc;
        for (long long mask = 0; mask < count; ++mask) acc += term(mask);
        return acc;
    }
    std::vector<FormalLog> part(static_cast<std::size_t>(count));
    bool failed = false;
    std::string msg;
#pragma omp parallel for schedule(dynamic)
    for (long long mask = 0; mask < count; ++mask) {
        try {
            part[static_cast<std::size_t>(mask)] = term(mask);
        } catch (const std::exception& e) {
#pragma omp critical
            { failed = true; msg = e.what(); }
        }
    }
    if (failed) throw DomainError(msg);
    FormalLog acc;
    for (auto& f : part) acc += f;
    return acc;
}

}  // namespace

FormalLog n_transform(const ArithFn& B, const Ideal& n, bool parallel) {
    return subset_sum(B, n, true, parallel);
}

FormalLog n_plus(const ArithFn& B, const Ideal& n, bool parallel) {
    return subset_sum(B, n, false, parallel);
}

FormalLog convolve_omega(const ArithFn& A, const Ideal& n) {
    auto n1 = square_decompose(n).n1;
    const Rational in = iota(n);
    FormalLog acc;
    for (auto& b : divisors(n1)) {
        Ideal b2 = b.pow(2);
        Ideal m = n.quotient(b2);
        acc += A(m) * (omega_pair(n, b2) * iota(m) / in);
    }
    return acc;
}

namespace {

// the two Euler-type products shared by every closed form
template <class T, class Pow>
T euler_product(const Ideal& n, Pow qpow_minus2, bool plus) {
    auto n1 = square_decompose(n).n1;
    T r = 1;
    for (auto& [p, e] : n1.exps()) {
        T x = qpow_minus2(p.q);  // q^{-2(1+t)}
        if (n.ord(p) == 2) {
            T y = x * T(p.q) / T(p.q - 1);  // (1-q^{-1})^{-1} x
            r *= plus ? T(T(1) + y) : T(T(1) - y);
        } else {
            r *= plus ? T(T(1) + x) : T(T(1) - x);
        }
    }
    return r;
}

Rational exact_norm_power(const Ideal& n, const Rational& t) {
    Rational N(n.norm());
    if (t.get_den() == 1) return rpow(N, t.get_num().get_si());
    // N^{a/b} rational only if N is a perfect b-th power
    Integer root;
    unsigned long b = t.get_den().get_ui();
    if (!mpz_root(root.get_mpz_t(), n.norm().get_mpz_t(), b))
        throw NonRationalPower("N(" + n.str() + ")^" + t.get_str() + " is irrational");
    return rpow(Rational(root), t.get_num().get_si());
}

Rational q_power_exact(long q, const Rational& e) {
    // q^e for the exponents -2(1+t) appearing above
    if (e.get_den() == 1) return rpow(Rational(q), e.get_num().get_si());
    Integer root;
    unsigned long b = e.get_den().get_ui();
    if (!mpz_root(root.get_mpz_t(), Integer(q).get_mpz_t(), b))
        throw NonRationalPower("q^" + e.get_str() + " is irrational");
    return rpow(Rational(root), e.get_num().get_si());
}

}  // namespace

Rational closed_power(const Ideal& n, const Rational& t) {
    Rational ex = -2 * (1 + t);
    return exact_norm_power(n, t) *
           euler_product<Rational>(n, [&](long q) { return q_power_exact(q, ex); }, false);
}

double closed_power_real(const Ideal& n, double t) {
    return std::exp(t * n.log_norm()) *
           euler_product<double>(n, [&](long q) { return std::pow(double(q), -2 * (1 + t)); }, false);
}

Rational n_plus_closed(const Ideal& n, const Rational& t) {
    Rational ex = -2 * (1 + t);
    return exact_norm_power(n, t) *
           euler_product<Rational>(n, [&](long q) { return q_power_exact(q, ex); }, true);
}

double n_plus_closed_real(const Ideal& n, double t) {
    return std::exp(t * n.log_norm()) *
           euler_product<double>(n, [&](long q) { return std::pow(double(q), -2 * (1 + t)); }, true);
}

FormalLog closed_log(const Ideal& n) {
    auto n1 = square_decompose(n).n1;
    FormalLog bracket = ArithFn::log_norm()(n);
    for (auto& [p, e] : n1.exps()) {
        Rational q = p.q;
        Rational c = n.ord(p) == 2 ? Rational(Rational(2) / (q * q - q - 1)) : Rational(Rational(2) / (q * q - 1));
        bracket += FormalLog::log_of(p.q, c);
    }
    return bracket * closed_power(n, 0);
}

std::vector<double> nplus_bound_ratios(long q, double c, double e, int kmax) {
    std::vector<double> out;
    Prime p{"p", q};
    for (int k = 1; k <= kmax; ++k) {
        Ideal n = Ideal::prime(p, 2 * k);
        double lhs = n_plus_closed_real(n, -c + e);
        double rhs = std::exp((-std::min(c, 1.0) + e) * n.log_norm());
        out.push_back(lhs / rhs);
    }
    return out;
}

}  // namespace rtf
