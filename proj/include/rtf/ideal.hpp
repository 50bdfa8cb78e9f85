// ideal.hpp - abstract ideal monoid over declared primes
#pragma once

#include "rtf/exact.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace rtf {

struct Prime {
    std::string id;
    long q = 2;
    bool operator<(const Prime& o) const { return id < o.id; }
    bool operator==(const Prime& o) const { return id == o.id; }
};

class DomainError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class CoprimalityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Ideal {
public:
    Ideal() = default;  // the unit ideal O
    explicit Ideal(std::map<Prime, int> exps);
    static Ideal prime(const Prime& p, int e = 1);

    const std::map<Prime, int>& exps() const { return e_; }
    int ord(const Prime& p) const;
    bool is_unit() const { return e_.empty(); }
    Integer norm() const;
    double log_norm() const;
    std::set<Prime> support() const;
    std::map<int, std::set<Prime>> strata() const;
    std::set<Prime> stratum(int k) const;
    bool squarefree() const;

    bool divides(const Ideal& n) const;  // this | n, i.e. n subset this
    Ideal operator*(const Ideal& o) const;
    Ideal quotient(const Ideal& o) const;  // this * o^{-1}; throws unless o | this
    Ideal pow(int k) const;
    bool operator==(const Ideal& o) const { return e_ == o.e_; }
    bool operator<(const Ideal& o) const { return e_ < o.e_; }

    std::string str() const;

private:
    std::map<Prime, int> e_;
};

struct SquareDecomposition {
    Ideal n0, n1;
};
SquareDecomposition square_decompose(const Ideal& n);

Rational iota(const Ideal& m);
// omega_v(c): 1 if v in S(c), else (q+1)/(q-1)
Rational omega_v(const Prime& v, const Ideal& c);
Rational omega_pair(const Ideal& m, const Ideal& b);

// every divisor of n (finite)
std::vector<Ideal> divisors(const Ideal& n);

struct QuadCharData {
    std::vector<int> arch_signs;        // eta_v(-1) per infinite place
    std::map<std::string, int> ram;     // prime id -> conductor exponent f >= 1
    std::map<std::string, int> unram;   // prime id -> eta~(p) = +-1
    int eps() const;                    // number of sign places
    int eta_tilde(const Prime& p) const;  // +-1; throws for ramified or undeclared primes
    void validate() const;
};

struct SignClass {
    int sign = 1;            // (-1)^eps * eta~(n)
    bool in_I = false;       // eta~ = -1 on every prime of n
    bool in_plus = false;
    bool in_minus = false;
};
SignClass sign_class(const Ideal& n, const QuadCharData& eta, const std::set<Prime>& excluded = {});

// "p^2*q" over a prime table; "O" or "" is the unit ideal
Ideal parse_ideal(const std::string& s, const std::map<std::string, Prime>& primes);

}  // namespace rtf
