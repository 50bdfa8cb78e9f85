// exact.hpp
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtf {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

// base^e for integer e (negative allowed when base != 0)
Rational rpow(const Rational& base, long e);
Integer ipow(long base, unsigned long e);

// trial-division factorisation; fine for residue cardinalities and lattice norms
std::vector<std::pair<long, int>> factor(long n);

// Exact element c + sum_i a_i * sym_i.
class FormalLog {
public:
    FormalLog() = default;
    FormalLog(const Rational& c) : c_(c) {}  // NOLINT: implicit on purpose

    static FormalLog sym(const std::string& name, const Rational& coeff = 1);
    // log n expanded over rational primes: log 12 = 2 log2 + log3
    static FormalLog log_of(long n, const Rational& coeff = 1);

    const Rational& constant() const { return c_; }
    const std::map<std::string, Rational>& coeffs() const { return a_; }
    Rational coeff(const std::string& name) const;
    bool is_zero() const { return c_ == 0 && a_.empty(); }
    bool is_constant() const { return a_.empty(); }

    FormalLog& operator+=(const FormalLog& o);
    FormalLog& operator-=(const FormalLog& o);
    FormalLog& operator*=(const Rational& s);
    friend FormalLog operator+(FormalLog a, const FormalLog& b) { return a += b; }
    friend FormalLog operator-(FormalLog a, const FormalLog& b) { return a -= b; }
    friend FormalLog operator*(FormalLog a, const Rational& s) { return a *= s; }
    friend FormalLog operator*(const Rational& s, FormalLog a) { return a *= s; }
    FormalLog operator-() const { return *this * Rational(-1); }
    bool operator==(const FormalLog& o) const { return c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const FormalLog& o) const { return !(*this == o); }

    // numeric value; logN symbols are evaluated automatically, others looked up
    double eval(const std::map<std::string, double>& values = {}) const;
    std::string str() const;

private:
    void prune();
    Rational c_ = 0;
    std::map<std::string, Rational> a_;
};

// Multiplicative monomial: prod sym^e * sqrt(radicand), radicand squarefree.
struct Monomial {
    std::map<std::string, Rational> exps;
    long radicand = 1;
    bool operator<(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps == o.exps && radicand == o.radicand; }
    bool trivial() const { return exps.empty() && radicand == 1; }
    std::string str() const;
};

// sum of Monomial * FormalLog; the ring needed for N(a)^{-1/2}, D^{3/2}, ...
class ScaledLog {
public:
    ScaledLog() = default;
    ScaledLog(const FormalLog& f);  // NOLINT
    ScaledLog(const Rational& r) : ScaledLog(FormalLog(r)) {}  // NOLINT

    static ScaledLog monomial(const Monomial& m, const Rational& c = 1);
    static ScaledLog symbol_power(const std::string& name, const Rational& e);
    // q^{e/2} exactly: rational part times sqrt of the squarefree kernel
    static ScaledLog half_power(long q, long e);

    const std::map<Monomial, FormalLog>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_scalar() const;  // no log symbols anywhere

    ScaledLog& operator+=(const ScaledLog& o);
    ScaledLog& operator-=(const ScaledLog& o);
    ScaledLog& operator*=(const Rational& s);
    // product is kept linear in log symbols: throws if both factors carry them
    friend ScaledLog operator*(const ScaledLog& a, const ScaledLog& b);
    friend ScaledLog operator+(ScaledLog a, const ScaledLog& b) { return a += b; }
    friend ScaledLog operator-(ScaledLog a, const ScaledLog& b) { return a -= b; }
    friend ScaledLog operator*(ScaledLog a, const Rational& s) { return a *= s; }
    friend ScaledLog operator*(const Rational& s, ScaledLog a) { return a *= s; }
    bool operator==(const ScaledLog& o) const { return t_ == o.t_; }
    bool operator!=(const ScaledLog& o) const { return !(*this == o); }

    // collapses to a FormalLog when every monomial is trivial
    FormalLog as_formal() const;
    double eval(const std::map<std::string, double>& values = {}) const;
    std::string str() const;

private:
    void add(const Monomial& m, const FormalLog& f);
    std::map<Monomial, FormalLog> t_;
};

// squarefree decomposition n = s^2 * k
std::pair<long, long> square_split(long n);

}  // namespace rtf
