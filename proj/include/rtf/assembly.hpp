// assembly.hpp - main terms, the geometric kernel transform, degenerate terms and error audits
#pragma once

#include "rtf/ntransform.hpp"
#include "rtf/testfns.hpp"

#include <complex>

namespace rtf {

class SignClassError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Opaque analytic constants. Exact results carry them as symbols:
//   monomials  D (= D_F), Lfin (= L_fin(1,eta)), G (= G(eta)), pi
//   log terms  logD, LpL (= L'/L(1,eta)), frakC (= frak C(l))
struct AnalyticConsts {
    double D_F = 1;
    double L_fin = 1;   // L_fin(1,eta) > 0
    double LpL = 0;     // L'/L(1,eta)
    double G_abs = 1;   // |G(eta)|
    std::map<std::string, double> extra;
    void validate() const;
};

struct WeightData {
    std::vector<int> l;   // one even weight per infinite place
    int l_tilde_mod4 = -1;  // i^{l~}; -1 selects the default sum of l_v
    double c() const;     // (min l/2 - 1) / d_F
    int i_power() const;
    void validate() const;
};

struct AssemblyConfig {
    std::map<std::string, Prime> primes;
    QuadCharData eta;
    AnalyticConsts consts;
    WeightData w;
    Ideal ideal(const std::string& s) const { return parse_ideal(s, primes); }
    // values for ScaledLog/FormalLog evaluation
    std::map<std::string, double> symbol_values() const;
};

double c_l(const WeightData& w);
double frak_c(const WeightData& w, const QuadCharData& eta);

// nu(n) following the N-transform closed form (products over S(n1) - S2(n) and S2(n))
Rational nu_of_n(const Ideal& n);
// the same constant with the first product over S(n) - (S1(n) u S2(n))
Rational nu_product_form(const Ideal& n);
FormalLog x_of_n(const Ideal& n);
FormalLog log_norm_f_eta(const AssemblyConfig& cfg);

struct AParts {
    Ideal minus, plus;  // a_eta^-, a_eta^+
};
AParts split_a(const Ideal& a, const QuadCharData& eta);
int d1(const Ideal& a);
bool delta_square(const Ideal& a);

double main_AL(const Ideal& n, const Ideal& a, const AssemblyConfig& cfg);
ScaledLog main_AL_exact(const Ideal& n, const Ideal& a, const AssemblyConfig& cfg);
ScaledLog main_ADL(const Ideal& n, const Ideal& a, const AssemblyConfig& cfg);

struct GeomTransform {
    ScaledLog main;        // from N[W_S] (the log N and constant parts)
    ScaledLog degenerate;  // from N[D W_S]; nonzero only when every exponent of n is 2
    int degenerate_i_power = 0;  // degenerate carries an extra factor i^{this}
};
// 2(-1)^{#S+eps} G^{-1} D N[W~_u](n) for alpha = alpha_a, built from brute-force N-transforms
// of 1 and log N and the unipotent moments
GeomTransform geom_kernel_transform(const Ideal& n, const Ideal& a, const AssemblyConfig& cfg);

struct DegenerateD {
    FormalLog ndlog;   // N[D log N](n), always 0
    Rational nd;       // N[D](n) / i^{l~}
    int i_power = 0;
};
DegenerateD degenerate_D(const Ideal& n, const QuadCharData& eta, const WeightData& w);
// the same two transforms by direct summation
DegenerateD degenerate_D_brute(const Ideal& n, const QuadCharData& eta, const WeightData& w);

// ADL* = 2(-1)^{#S+eps} G^{-1} D {N[W_u](n) + N[W_hyp](n)} + log(N(n)^{1/2} N(f_eta)) AL*(n) - N[AL^dw](n)
struct AdlStarInputs {
    ArithFn W_u, W_hyp, AL_dw;  // arithmetic functions on ideals
    Rational AL_star = 0;        // AL*(n)
};
ScaledLog adl_star_wiring(const Ideal& n, const Ideal& a, const AdlStarInputs& in, const AssemblyConfig& cfg);

struct PairTerm {
    Ideal b;
    Prime u;
    double D;       // D(n; b, u)
    double iota_ratio;
};
struct ErrorAudit {
    std::vector<PairTerm> pairs;
    double sum_norm = 0, norm_scale = 0, ratio_norm = 0;  // first pair sum vs N(n)^{-inf(c,1)+2e}
    double sum_x = 0, x = 0, ratio_x = 0;                 // second sum vs X(n)
    double zeta_bound = 0;  // Euler product over S(n) of (1-q^{-2+e})^{-1} times the X-type sum
    bool zeta_holds = false;
};
ErrorAudit error_bound_audit(const Ideal& n, double c, double eps);
// ratios of error_bound_audit over n = p^{2k}, k = 1..kmax
std::vector<ErrorAudit> error_bound_sweep(long q, int kmax, double c, double eps);

}  // namespace rtf
