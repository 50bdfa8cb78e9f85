// exact.cpp
#include "rtf/exact.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace rtf {

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

Integer ipow(long base, unsigned long e) {
    Integer b = base, out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

Rational rpow(const Rational& base, long e) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 to a negative power");
        return 0;
    }
    Integer n, d;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), k);
    Rational out = e > 0 ? Rational(n, d) : Rational(d, n);
    out.canonicalize();
    return out;
}

std::vector<std::pair<long, int>> factor(long n) {
    if (n <= 0) throw std::invalid_argument("factor: n must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::pair<long, long> square_split(long n) {
    long s = 1, k = 1;
    for (auto [p, e] : factor(n)) {
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) k *= p;
    }
    return {s, k};
}

// ---- FormalLog ----

FormalLog FormalLog::sym(const std::string& name, const Rational& coeff) {
    FormalLog f;
    if (coeff != 0) f.a_[name] = coeff;
    return f;
}

FormalLog FormalLog::log_of(long n, const Rational& coeff) {
    FormalLog f;
    if (n == 1 || coeff == 0) return f;
    for (auto [p, e] : factor(n)) f.a_["log" + std::to_string(p)] = coeff * e;
    return f;
}

Rational FormalLog::coeff(const std::string& name) const {
    auto it = a_.find(name);
    return it == a_.end() ? Rational(0) : it->second;
}

void FormalLog::prune() {
    for (auto it = a_.begin(); it != a_.end();) {
        if (it->second == 0) it = a_.erase(it); else ++it;
    }
}

FormalLog& FormalLog::operator+=(const FormalLog& o) {
    c_ += o.c_;
    for (auto& [k, v] : o.a_) a_[k] += v;
    prune();
    return *this;
}

FormalLog& FormalLog::operator-=(const FormalLog& o) {
    c_ -= o.c_;
    for (auto& [k, v] : o.a_) a_[k] -= v;
    prune();
    return *this;
}

FormalLog& FormalLog::operator*=(const Rational& s) {
    c_ *= s;
    for (auto& kv : a_) kv.second *= s;
    prune();
    return *this;
}

static double symbol_value(const std::string& name, const std::map<std::string, double>& values) {
    auto it = values.find(name);
    if (it != values.end()) return it->second;
    if (name == "pi") return 3.14159265358979323846;
    if (name.size() > 3 && name.compare(0, 3, "log") == 0 &&
        name.find_first_not_of("0123456789", 3) == std::string::npos)
        return std::log(std::stod(name.substr(3)));
    throw std::out_of_range("no value bound for symbol " + name);
}

double FormalLog::eval(const std::map<std::string, double>& values) const {
    double s = c_.get_d();
    for (auto& [k, v] : a_) s += v.get_d() * symbol_value(k, values);
    return s;
}

std::string FormalLog::str() const {
    std::ostringstream os;
    bool first = true;
    if (c_ != 0 || a_.empty()) { os << c_.get_str(); first = false; }
    for (auto& [k, v] : a_) {
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        Rational av = abs(v);
        if (av != 1) os << av.get_str() << "*";
        os << k;
        first = false;
    }
    return os.str();
}

// ---- Monomial / ScaledLog ----

bool Monomial::operator<(const Monomial& o) const {
    if (radicand != o.radicand) return radicand < o.radicand;
    return exps < o.exps;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, e] : exps) {
        if (!first) os << "*";
        os << k;
        if (e != 1) os << "^(" << e.get_str() << ")";
        first = false;
    }
    if (radicand != 1) os << (first ? "" : "*") << "sqrt(" << radicand << ")";
    else if (first) os << "1";
    return os.str();
}

ScaledLog::ScaledLog(const FormalLog& f) {
    if (!f.is_zero()) t_[Monomial{}] = f;
}

ScaledLog ScaledLog::monomial(const Monomial& m, const Rational& c) {
    ScaledLog s;
    s.add(m, FormalLog(c));
    return s;
}

ScaledLog ScaledLog::symbol_power(const std::string& name, const Rational& e) {
    Monomial m;
    if (e != 0) m.exps[name] = e;
    return monomial(m);
}

ScaledLog ScaledLog::half_power(long q, long e) {
    // q^{e/2} = q^{floor(e/2)} * q^{(e mod 2)/2}
    long whole = e >= 0 ? e / 2 : -((-e + 1) / 2);
    long rem = e - 2 * whole;  // 0 or 1
    Rational c = rpow(Rational(q), whole);
    Monomial m;
    if (rem) {
        auto [s, k] = square_split(q);
        c *= s;
        m.radicand = k;
    }
    return monomial(m, c);
}

bool ScaledLog::is_scalar() const {
    for (auto& [m, f] : t_) if (!f.is_constant()) return false;
    return true;
}

void ScaledLog::add(const Monomial& m, const FormalLog& f) {
    if (f.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) { t_.emplace(m, f); return; }
    it->second += f;
    if (it->second.is_zero()) t_.erase(it);
}

ScaledLog& ScaledLog::operator+=(const ScaledLog& o) {
    for (auto& [m, f] : o.t_) add(m, f);
    return *this;
}

ScaledLog& ScaledLog::operator-=(const ScaledLog& o) {
    for (auto& [m, f] : o.t_) add(m, -f);
    return *this;
}

ScaledLog& ScaledLog::operator*=(const Rational& s) {
    if (s == 0) { t_.clear(); return *this; }
    for (auto& kv : t_) kv.second *= s;
    return *this;
}

ScaledLog operator*(const ScaledLog& a, const ScaledLog& b) {
    if (!a.is_scalar() && !b.is_scalar())
        throw std::logic_error("ScaledLog product would be quadratic in log symbols");
    ScaledLog out;
    for (auto& [ma, fa] : a.t_) {
        for (auto& [mb, fb] : b.t_) {
            Monomial m = ma;
            for (auto& [k, e] : mb.exps) {
                m.exps[k] += e;
                if (m.exps[k] == 0) m.exps.erase(k);
            }
            // sqrt(r1)*sqrt(r2) = g*sqrt(r1 r2 / g^2), g = gcd
            long g = std::gcd(ma.radicand, mb.radicand);
            m.radicand = (ma.radicand / g) * (mb.radicand / g);
            Rational c = g;
            FormalLog f = fa.is_constant() ? fb * (fa.constant() * c) : fa * (fb.constant() * c);
            out.add(m, f);
        }
    }
    return out;
}

FormalLog ScaledLog::as_formal() const {
    FormalLog f;
    for (auto& [m, v] : t_) {
        if (!m.trivial()) throw std::logic_error("ScaledLog has non-trivial monomial " + m.str());
        f += v;
    }
    return f;
}

double ScaledLog::eval(const std::map<std::string, double>& values) const {
    double s = 0;
    for (auto& [m, f] : t_) {
        double w = std::sqrt(double(m.radicand));
        for (auto& [k, e] : m.exps) w *= std::pow(symbol_value(k, values), e.get_d());
        s += w * f.eval(values);
    }
    return s;
}

std::string ScaledLog::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, f] : t_) {
        if (!first) os << " + ";
        os << m.str() << "*(" << f.str() << ")";
        first = false;
    }
    return os.str();
}

}  // namespace rtf
