// assembly.cpp
#include "rtf/assembly.hpp"

#include "rtf/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rtf {

void AnalyticConsts::validate() const {
    if (!(D_F >= 1)) throw std::invalid_argument("D_F must be >= 1");
    if (!(L_fin > 0)) throw std::invalid_argument("L_fin(1,eta) must be > 0");
    if (!(G_abs > 0)) throw std::invalid_argument("|G(eta)| must be > 0");
}

double WeightData::c() const {
    int lmin = *std::min_element(l.begin(), l.end());
    return (lmin / 2.0 - 1) / double(l.size());
}

int WeightData::i_power() const {
    if (l_tilde_mod4 >= 0) return l_tilde_mod4 % 4;
    long s = 0;
    for (int v : l) s += v;
    return int(s % 4);
}

void WeightData::validate() const {
    if (l.empty()) throw std::invalid_argument("no weights");
    for (int v : l)
        if (v < 2 || v % 2) throw std::invalid_argument("weights must be even and >= 2");
}

std::map<std::string, double> AssemblyConfig::symbol_values() const {
    std::map<std::string, double> v = consts.extra;
    v["D"] = consts.D_F;
    v["Lfin"] = consts.L_fin;
    v["G"] = consts.G_abs;
    v["logD"] = std::log(consts.D_F);
    v["LpL"] = consts.LpL;
    v["frakC"] = frak_c(w, eta);
    return v;
}

double c_l(const WeightData& w) {
    w.validate();
    double logv = 0;
    for (int l : w.l) {
        double t;
        if (l > 200) t = std::log(2 * std::numbers::pi) + std::lgamma(l - 1.0) - 2 * std::lgamma(l / 2.0);
        else t = std::log(2 * std::numbers::pi * std::tgamma(l - 1.0) / std::pow(std::tgamma(l / 2.0), 2));
        logv += t;
    }
    return std::exp(logv);
}

double frak_c(const WeightData& w, const QuadCharData& eta) {
    if (eta.arch_signs.size() != w.l.size()) throw std::invalid_argument("one weight per infinite place");
    double s = 0;
    for (std::size_t v = 0; v < w.l.size(); ++v) {
        double h = 0;
        for (int k = 1; k <= w.l[v] / 2 - 1; ++k) h += 1.0 / k;
        s += h - 0.5 * std::log(std::numbers::pi) - 0.5 * std::numbers::egamma;
        if (eta.arch_signs[v] == -1) s -= std::numbers::ln2;
    }
    return s;
}

Rational nu_of_n(const Ideal& n) { return closed_power(n, 0); }

Rational nu_product_form(const Ideal& n) {
    Rational v = 1;
    for (auto& [p, e] : n.exps()) {
        Rational q = p.q;
        if (e == 2) v *= 1 - 1 / (q * q - q);
        else if (e > 2) v *= 1 - 1 / (q * q);
    }
    return v;
}

FormalLog x_of_n(const Ideal& n) {
    FormalLog x;
    for (auto& [p, e] : n.exps()) {
        Rational q = p.q;
        x += FormalLog::log_of(p.q, 1 / q + 1 / ((q - 1) * (q - 1)));
    }
    return x;
}

FormalLog log_norm_f_eta(const AssemblyConfig& cfg) {
    FormalLog f;
    for (auto& [id, e] : cfg.eta.ram) {
        auto it = cfg.primes.find(id);
        if (it == cfg.primes.end()) throw std::invalid_argument("ramified prime " + id + " is not declared");
        f += FormalLog::log_of(it->second.q, e);
    }
    return f;
}

AParts split_a(const Ideal& a, const QuadCharData& eta) {
    std::map<Prime, int> m, p;
    for (auto& [v, e] : a.exps()) (eta.eta_tilde(v) == -1 ? m : p)[v] = e;
    return {Ideal(m), Ideal(p)};
}

int d1(const Ideal& a) {
    int d = 1;
    for (auto& [p, e] : a.exps()) d *= e + 1;
    return d;
}

bool delta_square(const Ideal& a) {
    for (auto& [p, e] : a.exps())
        if (e % 2) return false;
    return true;
}

namespace {

void check_a(const Ideal& a, const AssemblyConfig& cfg) {
    for (auto& [p, e] : a.exps())
        if (cfg.eta.ram.count(p.id)) throw CoprimalityError("a meets the conductor of eta at " + p.id);
}

SignClass classify(const Ideal& n, const Ideal& a, const AssemblyConfig& cfg) {
    check_a(a, cfg);
    return sign_class(n, cfg.eta, a.support());
}

ScaledLog inv_sqrt_norm(const Ideal& a) {
    ScaledLog s(Rational(1));
    for (auto& [p, e] : a.exps()) s = s * ScaledLog::half_power(p.q, -e);
    return s;
}

// 4 D^{3/2} L_fin nu(n) N(a)^{-1/2}
ScaledLog main_prefactor(const Ideal& n, const Ideal& a) {
    return ScaledLog::symbol_power("D", Rational(3, 2)) * ScaledLog::symbol_power("Lfin", 1) * inv_sqrt_norm(a) *
           Rational(4 * nu_of_n(n));
}

FormalLog log_half_norm(const Ideal& m, const Rational& coeff) {
    FormalLog f;
    for (auto& [p, e] : m.exps()) f += FormalLog::log_of(p.q, coeff * e);
    return f;
}

}  // namespace

ScaledLog main_AL_exact(const Ideal& n, const Ideal& a, const AssemblyConfig& cfg) {
    if (!classify(n, a, cfg).in_plus) throw SignClassError("main_AL needs n in I+");
    auto [am, ap] = split_a(a, cfg.eta);
    if (!delta_square(am)) return ScaledLog();
    return main_prefactor(n, a) * Rational(d1(ap));
}

double main_AL(const Ideal& n, const Ideal& a, const AssemblyConfig& cfg) {
    return main_AL_exact(n, a, cfg).eval(cfg.symbol_values());
}

ScaledLog main_ADL(const Ideal& n, const Ideal& a, const AssemblyConfig& cfg) {
    if (!classify(n, a, cfg).in_minus) throw SignClassError("main_ADL needs n in I-");
    auto [am, ap] = split_a(a, cfg.eta);
    FormalLog bracket;
    if (delta_square(am)) {
        bracket += log_half_norm(n, Rational(1, 2)) - log_half_norm(a, Rational(1, 2));
        bracket += log_norm_f_eta(cfg) + FormalLog::sym("logD");
        for (auto& [p, e] : n.exps()) {
            Rational q = p.q;
            if (e == 2) bracket += FormalLog::log_of(p.q, 1 / (q * q - q - 1));
            else if (e > 2) bracket += FormalLog::log_of(p.q, 1 / (q * q - 1));
        }
        bracket += FormalLog::sym("LpL") + FormalLog::sym("frakC");
    }
    for (auto& [p, e] : am.exps()) {
        if (!delta_square(am.quotient(Ideal::prime(p)))) continue;
        bracket += FormalLog::log_of(p.q, Rational(e + 1) / 2);
    }
    return main_prefactor(n, a) * Rational(d1(ap)) * ScaledLog(bracket);
}

GeomTransform geom_kernel_transform(const Ideal& n, const Ideal& a, const AssemblyConfig& cfg) {
    auto sc = classify(n, a, cfg);
    if (!sc.in_minus) throw SignClassError("geom_kernel_transform needs n in I-");
    const int eps = cfg.eta.eps();
    const int nS = int(a.exps().size());
    // (1 - (-1)^eps eta~(n)) (-1)^eps G D^{1/2}, then the outer 2 (-1)^{#S+eps} G^{-1} D
    Rational sign_factor = Rational(1 - sc.sign) * ((eps % 2) ? -1 : 1);
    Rational outer = Rational(2) * (((nS + eps) % 2) ? -1 : 1);
    ScaledLog pre = ScaledLog::symbol_power("G", -1) * ScaledLog::symbol_power("D", 1) *
                    ScaledLog::symbol_power("G", 1) * ScaledLog::symbol_power("D", Rational(1, 2)) *
                    Rational(outer * sign_factor);
    // pi^eps L(1,eta) with L(1,eta) = pi^{-eps} L_fin(1,eta)
    pre = pre * ScaledLog::symbol_power("pi", eps) * ScaledLog::symbol_power("pi", -eps) *
          ScaledLog::symbol_power("Lfin", 1);

    std::vector<UnipMoment> mom;
    for (auto& [p, e] : a.exps()) mom.push_back(unip_moments(p.q, cfg.eta.eta_tilde(p), e));
    ScaledLog prodU(Rational(1));
    for (auto& m : mom) prodU = prodU * m.U;
    ScaledLog dsum;
    for (std::size_t v = 0; v < mom.size(); ++v) {
        ScaledLog t = mom[v].dU;
        for (std::size_t w = 0; w < mom.size(); ++w)
            if (w != v) t = t * mom[w].U;
        dsum += t;
    }

    const FormalLog n1 = n_transform(ArithFn::constant(1), n);
    const FormalLog nlog = n_transform(ArithFn::log_norm(), n);
    const FormalLog consts = FormalLog::sym("logD") + log_norm_f_eta(cfg) + FormalLog::sym("LpL") + FormalLog::sym("frakC");
    if (!n1.is_constant()) throw std::logic_error("N[1] must be rational");

    GeomTransform g;
    ScaledLog body = ScaledLog(nlog * Rational(1, 2) + consts * n1.constant()) * prodU + dsum * n1.constant();
    g.main = pre * body;

    // D(m) = (-1)^eps eta~(m) delta(m = O) i^{l~}: only the constant part of W_S survives since log N(O) = 0
    auto dd = degenerate_D_brute(n, cfg.eta, cfg.w);
    if (!dd.ndlog.is_zero()) throw std::logic_error("N[D log N] must vanish");
    ScaledLog dbody = ScaledLog(consts * dd.nd) * prodU + dsum * dd.nd;
    g.degenerate = pre * dbody;
    g.degenerate_i_power = dd.i_power;
    return g;
}

DegenerateD degenerate_D(const Ideal& n, const QuadCharData& eta, const WeightData& w) {
    DegenerateD d;
    d.i_power = w.i_power();
    for (auto& [p, e] : n.exps())
        if (e != 2) return d;
    Rational v = 1;
    for (auto& [p, e] : n.exps()) v *= Rational(p.q + 1) / (p.q - 1);
    int sgn = ((eta.eps() + int(n.exps().size())) % 2) ? -1 : 1;
    d.nd = v * sgn / iota(n);
    return d;
}

DegenerateD degenerate_D_brute(const Ideal& n, const QuadCharData& eta, const WeightData& w) {
    const int eps_sign = (eta.eps() % 2) ? -1 : 1;
    auto dfn = [&](bool with_log) {
        ArithFn f;
        f.eval = [&, with_log](const Ideal& m) -> FormalLog {
            if (!m.is_unit()) return FormalLog();
            FormalLog base = with_log ? FormalLog() /* log N(O) = 0 */ : FormalLog(Rational(1));
            int t = 1;
            for (auto& [p, e] : m.exps()) if (e % 2) t *= eta.eta_tilde(p);
            return base * Rational(eps_sign * t);
        };
        return f;
    };
    DegenerateD d;
    d.i_power = w.i_power();
    d.ndlog = n_transform(dfn(true), n, false);
    d.nd = n_transform(dfn(false), n, false).constant();
    return d;
}

ScaledLog adl_star_wiring(const Ideal& n, const Ideal& a, const AdlStarInputs& in, const AssemblyConfig& cfg) {
    check_a(a, cfg);
    const int eps = cfg.eta.eps(), nS = int(a.exps().size());
    ScaledLog pre = ScaledLog::symbol_power("G", -1) * ScaledLog::symbol_power("D", 1) *
                    Rational(2 * (((nS + eps) % 2) ? -1 : 1));
    FormalLog geo = n_transform(in.W_u, n) + n_transform(in.W_hyp, n);
    FormalLog lg = (log_half_norm(n, Rational(1, 2)) + log_norm_f_eta(cfg)) * in.AL_star;
    return pre * ScaledLog(geo) + ScaledLog(lg - n_transform(in.AL_dw, n));
}

ErrorAudit error_bound_audit(const Ideal& n, double c, double eps) {
    ErrorAudit r;
    const double cm = std::min(c, 1.0);
    const double in = to_double(iota(n)), Nn = n.norm().get_d();
    Compensated<double> s1, s2;
    for (auto& b : divisors(n)) {
        Ideal b2 = b.pow(2);
        if (!b2.divides(n)) continue;
        for (auto& [u, e] : n.exps()) {
            Ideal bu = b2 * Ideal::prime(u);
            if (!bu.divides(n)) continue;
            Ideal rest = n.quotient(bu);
            const double q = double(u.q), lq = std::log(q);
            double ir = to_double(iota(rest)) / in;
            double Dv = to_double(omega_pair(n, bu)) * lq * (b.ord(u) + (std::sqrt(q) + 1) / (std::sqrt(q) - 1));
            r.pairs.push_back({b, u, Dv, ir});
            s1.add(std::pow(bu.norm().get_d(), eps) * ir * std::pow(rest.norm().get_d(), -cm + eps));
            s2.add(std::pow(b.norm().get_d(), eps) * std::pow((q + 1) / (q - 1), 2) * lq * ir);
        }
    }
    r.sum_norm = s1.value();
    r.norm_scale = std::pow(Nn, -cm + 2 * eps);
    r.ratio_norm = r.sum_norm / r.norm_scale;
    r.sum_x = s2.value();
    r.x = x_of_n(n).eval();
    r.ratio_x = r.x > 0 ? r.sum_x / r.x : 0;
    double zeta = 1, xs = 0;
    for (auto& [u, e] : n.exps()) {
        const double q = double(u.q), lq = std::log(q);
        zeta /= 1 - std::pow(q, -2 + eps);
        xs += lq / q + 4 * lq / ((q - 1) * (q - 1));
    }
    r.zeta_bound = zeta * xs;
    r.zeta_holds = r.sum_x <= r.zeta_bound * (1 + 1e-12);
    return r;
}

std::vector<ErrorAudit> error_bound_sweep(long q, int kmax, double c, double eps) {
    std::vector<ErrorAudit> out;
    Prime p{"p", q};
    for (int k = 1; k <= kmax; ++k) out.push_back(error_bound_audit(Ideal::prime(p, 2 * k), c, eps));
    return out;
}

}  // namespace rtf
