// ideal.cpp
#include "rtf/ideal.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace rtf {

Ideal::Ideal(std::map<Prime, int> exps) {
    for (auto& [p, e] : exps) {
        if (p.q < 2) throw std::invalid_argument("prime " + p.id + " has q < 2");
        if (e < 0) throw std::invalid_argument("negative exponent in integral ideal");
        if (e > 0) e_[p] = e;
    }
}

Ideal Ideal::prime(const Prime& p, int e) { return Ideal({{p, e}}); }

int Ideal::ord(const Prime& p) const {
    auto it = e_.find(p);
    return it == e_.end() ? 0 : it->second;
}

Integer Ideal::norm() const {
    Integer n = 1;
    for (auto& [p, e] : e_) n *= ipow(p.q, e);
    return n;
}

double Ideal::log_norm() const {
    double s = 0;
    for (auto& [p, e] : e_) s += e * std::log(double(p.q));
    return s;
}

std::set<Prime> Ideal::support() const {
    std::set<Prime> s;
    for (auto& kv : e_) s.insert(kv.first);
    return s;
}

std::map<int, std::set<Prime>> Ideal::strata() const {
    std::map<int, std::set<Prime>> out;
    for (auto& [p, e] : e_) out[e].insert(p);
    return out;
}

std::set<Prime> Ideal::stratum(int k) const {
    std::set<Prime> s;
    for (auto& [p, e] : e_) if (e == k) s.insert(p);
    return s;
}

bool Ideal::squarefree() const {
    for (auto& kv : e_) if (kv.second > 1) return false;
    return true;
}

bool Ideal::divides(const Ideal& n) const {
    for (auto& [p, e] : e_) if (n.ord(p) < e) return false;
    return true;
}

Ideal Ideal::operator*(const Ideal& o) const {
    auto m = e_;
    for (auto& [p, e] : o.e_) {
        auto it = m.find(p);
        if (it != m.end() && it->first.q != p.q) throw std::invalid_argument("prime " + p.id + " declared with two q");
        m[p] += e;
    }
    return Ideal(std::move(m));
}

Ideal Ideal::quotient(const Ideal& o) const {
    if (!o.divides(*this)) throw DomainError(o.str() + " does not divide " + str());
    auto m = e_;
    for (auto& [p, e] : o.e_) m[p] -= e;
    return Ideal(std::move(m));
}

Ideal Ideal::pow(int k) const {
    auto m = e_;
    for (auto& kv : m) kv.second *= k;
    return Ideal(std::move(m));
}

std::string Ideal::str() const {
    if (e_.empty()) return "O";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, e] : e_) {
        if (!first) os << "*";
        os << p.id;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

SquareDecomposition square_decompose(const Ideal& n) {
    std::map<Prime, int> a, b;
    for (auto& [p, e] : n.exps()) {
        if (e % 2) a[p] = 1;
        if (e / 2) b[p] = e / 2;
    }
    return {Ideal(a), Ideal(b)};
}

Rational iota(const Ideal& m) {
    Rational r = 1;
    for (auto& [p, e] : m.exps()) r *= Rational(ipow(p.q, e - 1) * (1 + p.q));
    return r;
}

Rational omega_v(const Prime& v, const Ideal& c) {
    if (c.ord(v) > 0) return 1;
    return Rational(v.q + 1) / (v.q - 1);
}

Rational omega_pair(const Ideal& m, const Ideal& b) {
    if (!b.divides(m)) return 0;
    Ideal c = m.quotient(b);
    Rational r = 1;
    for (auto& kv : b.exps()) r *= omega_v(kv.first, c);
    return r;
}

std::vector<Ideal> divisors(const Ideal& n) {
    std::vector<Ideal> out{Ideal()};
    for (auto& [p, e] : n.exps()) {
        std::vector<Ideal> next;
        for (auto& d : out)
            for (int k = 0; k <= e; ++k) next.push_back(d * Ideal::prime(p, k));
        out.swap(next);
    }
    return out;
}

int QuadCharData::eps() const {
    int c = 0;
    for (int s : arch_signs) c += (s == -1);
    return c;
}

int QuadCharData::eta_tilde(const Prime& p) const {
    if (ram.count(p.id)) throw CoprimalityError("prime " + p.id + " is ramified for eta");
    auto it = unram.find(p.id);
    if (it == unram.end()) throw std::out_of_range("no eta value for prime " + p.id);
    return it->second;
}

void QuadCharData::validate() const {
    for (int s : arch_signs)
        if (s != 1 && s != -1) throw std::invalid_argument("arch sign must be +-1");
    for (auto& [id, f] : ram) {
        if (f < 1) throw std::invalid_argument("ramified conductor exponent must be >= 1");
        if (unram.count(id)) throw std::invalid_argument("prime " + id + " both ramified and unramified");
    }
    for (auto& [id, v] : unram)
        if (v != 1 && v != -1) throw std::invalid_argument("unramified eta value must be +-1");
}

SignClass sign_class(const Ideal& n, const QuadCharData& eta, const std::set<Prime>& excluded) {
    SignClass sc;
    int s = (eta.eps() % 2) ? -1 : 1;
    bool inert = true;
    for (auto& [p, e] : n.exps()) {
        if (excluded.count(p)) throw CoprimalityError("n meets the excluded set at " + p.id);
        int t = eta.eta_tilde(p);
        if (e % 2 && t == -1) s = -s;
        if (t != -1) inert = false;
    }
    sc.sign = s;
    sc.in_I = inert;
    sc.in_plus = inert && s == 1;
    sc.in_minus = inert && s == -1;
    return sc;
}

Ideal parse_ideal(const std::string& s, const std::map<std::string, Prime>& primes) {
    std::string t;
    for (char c : s) if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t == "O" || t == "1") return Ideal();
    Ideal out;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.empty()) throw std::invalid_argument("empty factor in ideal " + s);
        auto caret = tok.find('^');
        std::string id = tok.substr(0, caret);
        int e = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        auto it = primes.find(id);
        if (it == primes.end()) throw std::invalid_argument("undeclared prime " + id);
        out = out * Ideal::prime(it->second, e);
    }
    return out;
}

}  // namespace rtf
