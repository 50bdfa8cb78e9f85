// spectral.cpp
#include "rtf/spectral.hpp"

#include <cmath>

namespace rtf {

std::complex<double> r_z_at(const LocalRep<double>& rep, int eta, int k, std::complex<double> z) {
    using C = std::complex<double>;
    LocalRep<C> r{rep.c, rep.q, C(rep.Q), rep.chi};
    C X = std::exp((0.5 - z) * std::log(double(rep.q)));
    return r_z_closed(r, eta, k, X);
}

double satake_Q(std::complex<double> a, long q) {
    if (std::abs(std::abs(a) - 1.0) > 1e-12) throw std::invalid_argument("Satake parameter off the unit circle");
    double sq = std::sqrt(double(q));
    return (a + 1.0 / a).real() / (sq + 1.0 / sq);
}

namespace {

struct Local {
    Prime p;
    int k;
    LocalRepData rep;
};

// places of S(n f^{-1}) with their data; validates the inert condition
std::vector<Local> collect(const PiData& pi, const Ideal& f_pi, const Ideal& n, const QuadCharData& eta) {
    if (!f_pi.divides(n)) throw std::invalid_argument("f_pi does not divide n");
    for (auto& [p, e] : n.exps())
        if (eta.eta_tilde(p) != -1) throw InertViolation("eta~(" + p.id + ") != -1");
    Ideal m = n.quotient(f_pi);
    std::vector<Local> out;
    for (auto& [p, k] : m.exps()) {
        auto it = pi.find(p);
        LocalRepData rep;
        if (it != pi.end()) rep = it->second;
        else if (f_pi.ord(p) != 0) throw std::invalid_argument("missing local data at " + p.id);
        rep.c = f_pi.ord(p);
        rep.q = p.q;
        out.push_back({p, k, rep});
    }
    return out;
}

}  // namespace

WeightValue w_and_dw(const PiData& pi, const Ideal& f_pi, const Ideal& n, const QuadCharData& eta) {
    auto places = collect(pi, f_pi, n, eta);
    Ideal m = n.quotient(f_pi);
    std::vector<const Local*> odd;
    for (auto& l : places) if (l.k % 2) odd.push_back(&l);
    WeightValue out{0, FormalLog()};
    if (odd.empty()) {
        out.w = omega_pair(n, m);
        for (auto& l : places) out.dw -= FormalLog::log_of(l.p.q, out.w * (l.k / 2));
        return out;
    }
    if (odd.size() > 1) return out;
    const Local& u = *odd.front();
    Ideal bbu = m;  // b^2 p_u
    Rational x;
    const Rational q = u.p.q;
    if (u.rep.c == 0) x = (q - 1) / ((q + 1) * (1 + u.rep.Q));
    else if (u.rep.c == 1) x = 1 / (1 + Rational(u.rep.chi) / q);
    else x = 1;
    out.dw = FormalLog::log_of(u.p.q, omega_pair(n, bbu) * (Rational(u.k / 2) + x));
    return out;
}

WeightValue w_and_dw_product(const PiData& pi, const Ideal& f_pi, const Ideal& n, const QuadCharData& eta) {
    auto places = collect(pi, f_pi, n, eta);
    std::vector<Rational> r;
    for (auto& l : places) r.push_back(r_z_sum(l.rep, -1, l.k, Rational(1)));
    WeightValue out{1, FormalLog()};
    for (auto& v : r) out.w *= v;
    for (std::size_t i = 0; i < places.size(); ++i) {
        Rational rest = 1;
        for (std::size_t j = 0; j < places.size(); ++j) if (j != i) rest *= r[j];
        if (rest == 0) continue;
        out.dw -= FormalLog::log_of(places[i].p.q, partial_r(places[i].rep, -1, places[i].k) * rest);
    }
    return out;
}

FormalLog adl_plus_factor(const Ideal& f_pi, const Ideal& f_eta) {
    FormalLog f;
    for (auto& [p, e] : f_pi.exps()) f += FormalLog::log_of(p.q, Rational(-e) / 2);
    for (auto& [p, e] : f_eta.exps()) f += FormalLog::log_of(p.q, -e);
    f += FormalLog::sym("logD", -1);
    return f;
}

}  // namespace rtf
