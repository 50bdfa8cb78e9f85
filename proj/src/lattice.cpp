// lattice.cpp
#include "rtf/lattice.hpp"

#include "rtf/parallel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

namespace rtf {

namespace {
constexpr double kPi = std::numbers::pi;

bool squarefree(long m) {
    for (auto& [p, e] : factor(m)) if (e > 1) return false;
    return true;
}

std::string strip(const std::string& s) {
    std::string o;
    for (char c : s) if (!std::isspace(static_cast<unsigned char>(c))) o += c;
    return o;
}

// x + y sqrt m with integer x, y
struct QElem {
    Integer x = 1, y = 0;
};
QElem mul(const QElem& a, const QElem& b, long m) {
    return {a.x * b.x + m * a.y * b.y, a.x * b.y + a.y * b.x};
}
}  // namespace

Field Field::parse(const std::string& s0) {
    std::string s = strip(s0);
    if (s == "Q") return {1};
    if (s.rfind("Q(sqrt", 0) == 0 && s.back() == ')') {
        long m = std::stol(s.substr(6, s.size() - 7));
        if (m <= 1 || !squarefree(m)) throw UnsupportedField("Q(sqrt m) needs m squarefree > 1");
        return {m};
    }
    throw UnsupportedField("field must be Q or Q(sqrt m): " + s0);
}

std::string Field::str() const { return m == 1 ? "Q" : "Q(sqrt" + std::to_string(m) + ")"; }

double EmbeddedLattice::covolume() const {
    if (d == 1) return std::fabs(basis[0][0]);
    return std::fabs(basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]);
}

EmbeddedLattice embed_ideal(const Field& F, const std::string& desc0) {
    std::string desc = strip(desc0);
    EmbeddedLattice L;
    L.field = F;
    L.d = F.degree();
    L.provenance = F.str() + ":" + (desc.empty() ? "O" : desc);
    if (F.m == 1) {
        Rational g = (desc.empty() || desc == "O") ? Rational(1) : parse_rational(desc);
        if (g == 0) throw std::invalid_argument("zero ideal");
        L.basis[0][0] = std::fabs(g.get_d());
        L.norm = abs(g);
        return L;
    }
    if (F.m <= 1 || !squarefree(F.m)) throw UnsupportedField("bad real quadratic field");
    QElem g;
    std::stringstream ss(desc.empty() ? "O" : desc);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.empty() || tok == "O") continue;
        int k = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            k = std::stoi(tok.substr(caret + 1));
            tok = tok.substr(0, caret);
        }
        if (k < 0) throw std::invalid_argument("negative powers are not supported");
        QElem f;
        if (tok == "sqrt") f = {0, 1};
        else if (tok.front() == '(' && tok.back() == ')') {
            auto comma = tok.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("expected (x,y): " + tok);
            f = {Integer(std::stol(tok.substr(1, comma - 1))), Integer(std::stol(tok.substr(comma + 1, tok.size() - comma - 2)))};
        } else f = {Integer(std::stol(tok)), 0};
        for (int i = 0; i < k; ++i) g = mul(g, f, F.m);
    }
    Integer nrm = g.x * g.x - F.m * g.y * g.y;
    if (nrm == 0) throw std::invalid_argument("zero ideal");
    const double sm = std::sqrt(double(F.m));
    auto emb = [&](double a, double b) { return std::array<double, 2>{a + b * sm, a - b * sm}; };
    double gx = g.x.get_d(), gy = g.y.get_d();
    L.basis[0] = emb(gx, gy);
    // second generator gamma * omega
    if (F.m % 4 == 1) L.basis[1] = emb((gx + gy * F.m) / 2, (gx + gy) / 2);
    else L.basis[1] = emb(gy * F.m, gx);
    L.norm = Rational(abs(nrm));
    return L;
}

EmbeddedLattice scale_lattice(const EmbeddedLattice& L, long N) {
    EmbeddedLattice o = L;
    for (auto& row : o.basis) for (auto& v : row) v *= double(N);
    o.norm = L.norm * rpow(Rational(N), L.d);
    o.provenance = L.provenance + "*" + std::to_string(N);
    return o;
}

std::array<double, 2> embed_point(const EmbeddedLattice& L, const std::array<long, 2>& c) {
    if (L.d == 1) return {double(c[0]) * L.basis[0][0], 0.0};
    return {c[0] * L.basis[0][0] + c[1] * L.basis[1][0], c[0] * L.basis[0][1] + c[1] * L.basis[1][1]};
}

namespace {
double norm2(const std::array<double, 2>& x) { return x[0] * x[0] + x[1] * x[1]; }

struct Gram {
    double g11, g12, g22, det;
};
Gram gram(const EmbeddedLattice& L) {
    auto& b = L.basis;
    Gram G{b[0][0] * b[0][0] + b[0][1] * b[0][1], b[0][0] * b[1][0] + b[0][1] * b[1][1],
           b[1][0] * b[1][0] + b[1][1] * b[1][1], 0};
    G.det = G.g11 * G.g22 - G.g12 * G.g12;
    return G;
}

// c1 range of row c2 with a safety margin; points are filtered by their computed norm afterwards
std::pair<long, long> row_range(const Gram& G, long c2, double R) {
    double bq = G.g12 * c2, cq = G.g22 * double(c2) * c2 - R * R;
    double disc = bq * bq - G.g11 * cq;
    if (disc < -1e-9 * (bq * bq + std::fabs(G.g11 * cq) + 1)) return {1, 0};
    double s = std::sqrt(std::max(disc, 0.0));
    return {long(std::floor((-bq - s) / G.g11)) - 1, long(std::ceil((-bq + s) / G.g11)) + 1};
}

long c2_max(const Gram& G, double R) { return long(std::floor(R * std::sqrt(G.g11 / G.det))) + 1; }

template <class Visit>
void visit_row(const EmbeddedLattice& L, const Gram& G, long c2, double R, Visit&& visit) {
    auto [lo, hi] = row_range(G, c2, R);
    for (long c1 = lo; c1 <= hi; ++c1) {
        if (c1 == 0 && c2 == 0) continue;
        auto x = embed_point(L, {c1, c2});
        if (norm2(x) <= R * R) visit(c1, x);
    }
}
}  // namespace

std::vector<std::array<long, 2>> enumerate_points(const EmbeddedLattice& L, double R, bool parallel) {
    std::vector<std::array<long, 2>> out;
    if (L.d == 1) {
        long K = long(std::floor(R / std::fabs(L.basis[0][0])));
        for (long k = -K; k <= K; ++k)
            if (k != 0 && std::fabs(k * L.basis[0][0]) <= R) out.push_back({k, 0});
        return out;
    }
    Gram G = gram(L);
    long M = c2_max(G, R);
    std::vector<std::vector<std::array<long, 2>>> rows(static_cast<std::size_t>(2 * M + 1));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < 2 * M + 1; ++i) {
        long c2 = i - M;
        visit_row(L, G, c2, R, [&](long c1, const std::array<double, 2>&) { rows[std::size_t(i)].push_back({c1, c2}); });
    }
    for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::vector<std::array<long, 2>> enumerate_box(const EmbeddedLattice& L, double R) {
    std::vector<std::array<long, 2>> out;
    if (L.d == 1) return enumerate_points(L, R, false);
    // ||c1 g1 + c2 g2|| <= R implies |c_i| <= R ||g_j|| / covol
    Gram G = gram(L);
    long B1 = long(std::ceil(R * std::sqrt(G.g22 / G.det))) + 1, B2 = long(std::ceil(R * std::sqrt(G.g11 / G.det))) + 1;
    for (long c2 = -B2; c2 <= B2; ++c2)
        for (long c1 = -B1; c1 <= B1; ++c1) {
            if (c1 == 0 && c2 == 0) continue;
            if (norm2(embed_point(L, {c1, c2})) <= R * R) out.push_back({c1, c2});
        }
    return out;
}

double f_weight(const std::vector<double>& l, const double* x, int d) {
    double v = 1;
    for (int j = 0; j < d; ++j) v *= std::pow(1 + std::fabs(x[j]), -l[std::size_t(j)] / 2);
    return v;
}

namespace {
void check_weights(const std::vector<double>& l, int d) {
    if (int(l.size()) != d) throw std::invalid_argument("need one weight per embedding");
    for (double v : l) if (v < 4) throw std::invalid_argument("weights must be >= 4");
}
}  // namespace

double theta_partial(const EmbeddedLattice& L, const std::vector<double>& l, double R, bool parallel) {
    check_weights(l, L.d);
    if (L.d == 1) {
        const double D = std::fabs(L.basis[0][0]);
        long K = long(std::floor(R / D));
        double s = blocked_sum<double>(1, K + 1, [&](std::int64_t n) {
            double x = D * double(n);
            return x <= R ? 2 * std::pow(1 + x, -l[0] / 2) : 0.0;
        }, parallel);
        return s;
    }
    Gram G = gram(L);
    long M = c2_max(G, R);
    return blocked_sum<double>(-M, M + 1, [&](std::int64_t c2) {
        Compensated<double> acc;
        visit_row(L, G, long(c2), R, [&](long, const std::array<double, 2>& x) { acc.add(f_weight(l, x.data(), 2)); });
        return acc.value();
    }, parallel);
}

double unit_ball_volume(int d) { return std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0 + 1); }
double sphere_area(int d) { return 2 * std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0); }

double r_lattice(const EmbeddedLattice& L) {
    if (L.d == 1) return std::fabs(L.basis[0][0]) / 2;
    double R = std::sqrt(std::min(norm2(L.basis[0]), norm2(L.basis[1]))) * (1 + 1e-12);
    double best = R * R;
    for (auto& c : enumerate_points(L, R, false)) best = std::min(best, norm2(embed_point(L, c)));
    return std::sqrt(best) / 2;
}

namespace {
// sum_{n > N} (1 + D n)^{-s}: Euler-Maclaurin through B_4, remainder bounded by the B_6 term
std::pair<double, double> em_tail(double D, double s, long N) {
    const double x = 1 + D * double(N);
    auto deriv = [&](int k) {
        double c = 1;
        for (int i = 0; i < k; ++i) c *= -(s + i) * D;
        return c * std::pow(x, -s - k);
    };
    double integral = std::pow(x, 1 - s) / (D * (s - 1));
    double est = integral - deriv(0) / 2 - deriv(1) / 12 + deriv(3) / 720;
    double bound = std::fabs(deriv(5)) / 30240;
    return {est, bound};
}
}  // namespace

double I_total(const std::vector<double>& l) {
    double v = 1;
    for (double lj : l) v *= 2 / (lj / 2 - 1);
    return v;
}

double phi_diag(const std::vector<double>& l, double t) {
    if (l.size() == 1) return 2 * std::pow(1 + t, -l[0] / 2);
    if (l.size() != 2) throw std::invalid_argument("phi is implemented for d <= 2");
    auto g = [&](double th) {
        double x[2] = {t * std::cos(th), t * std::sin(th)};
        return f_weight(l, x, 2);
    };
    // the mass sits within ~1/t of the two axes
    double c = std::min(0.5, 20.0 / std::max(t, 1.0));
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    double v = GK::integrate(g, 0.0, c, 15, 1e-13) + GK::integrate(g, c, kPi / 2 - c, 15, 1e-13) +
               GK::integrate(g, kPi / 2 - c, kPi / 2, 15, 1e-13);
    return 4 * v;
}

double I_ball(const std::vector<double>& l, double rho) {
    if (l.size() == 1) {
        double s = l[0] / 2;
        return 2 * (1 - std::pow(1 + rho, 1 - s)) / (s - 1);
    }
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    return GK::integrate([&](double s) { return s * phi_diag(l, s); }, 0.0, rho, 12, 1e-11);
}

ThetaValue theta(const EmbeddedLattice& L, const std::vector<double>& l, double R, double tol, bool parallel) {
    check_weights(l, L.d);
    if (R <= 0) throw std::invalid_argument("R must be > 0");
    ThetaValue out{theta_partial(L, l, R, parallel), 0, r_lattice(L), L.covolume()};
    if (L.d == 1) {
        const double D = std::fabs(L.basis[0][0]);
        auto [est, bound] = em_tail(D, l[0] / 2, long(std::floor(R / D)));
        out.value += 2 * est;
        out.tail_bound = 2 * bound;
    } else {
        // disjoint balls of radius r around the points outside B_R sit outside B_{R-r}
        const double r = out.r, rho = std::max(0.0, R - r);
        double lmax = *std::max_element(l.begin(), l.end());
        double ib = sphere_area(2) * std::pow(1 + r, -2 * lmax / 2) * r * r / 2;
        double outside = 0;
        for (std::size_t j = 0; j < 2; ++j) {
            double term = 2 * std::pow(1 + rho / std::sqrt(2.0), 1 - l[j] / 2) / (l[j] / 2 - 1);
            term *= 2 / (l[1 - j] / 2 - 1);
            outside += term;
        }
        out.tail_bound = outside / ib;
    }
    // floating rounding: a few ulps per term plus the compensated reduction
    out.tail_bound += 8 * std::numeric_limits<double>::epsilon() * out.value;
    if (tol > 0 && out.tail_bound > tol) throw TailTooLarge("theta tail bound exceeds tolerance");
    return out;
}

double sphere_I(const std::vector<double>& lambda, SphereMode mode, long samples, std::uint64_t seed, bool parallel) {
    const int d = int(lambda.size());
    if (d < 1) throw std::invalid_argument("empty lambda");
    for (double v : lambda) if (v >= 1) throw DomainError("sphere_I needs lambda_j < 1");
    if (mode == SphereMode::Closed) {
        double s = 0, p = 1;
        for (double v : lambda) {
            s += (1 - v) / 2;
            p *= std::tgamma((1 - v) / 2);
        }
        return 2 * p / std::tgamma(s);
    }
    if (mode == SphereMode::Quad) {
        boost::math::quadrature::tanh_sinh<double> ts;
        if (d == 2) {
            // fold at pi/4 so both singular endpoints sit at 0, where sin is accurate
            auto g = [&](double th) {
                double c = std::cos(th), s = std::sin(th);
                return std::pow(c, -lambda[0]) * std::pow(s, -lambda[1]) + std::pow(s, -lambda[0]) * std::pow(c, -lambda[1]);
            };
            return 4 * ts.integrate(g, 0.0, kPi / 4, 1e-13);
        }
        if (d == 3) {
            auto outer = [&](double ph) {
                auto inner = [&](double th) {
                    return std::pow(std::sin(ph) * std::cos(th), -lambda[0]) * std::pow(std::sin(ph) * std::sin(th), -lambda[1]);
                };
                boost::math::quadrature::tanh_sinh<double> ts2;
                return ts2.integrate(inner, 0.0, kPi / 2, 1e-12) * std::pow(std::cos(ph), -lambda[2]) * std::sin(ph);
            };
            return 8 * ts.integrate(outer, 0.0, kPi / 2, 1e-11);
        }
        throw std::invalid_argument("quadrature mode supports d = 2, 3");
    }
    // Monte Carlo: fixed per-block streams, so the estimate is independent of the thread count
    const std::int64_t nb = kReduceBlocks;
    double mean = blocked_sum<double>(0, nb, [&](std::int64_t b) {
        std::seed_seq sq{std::uint64_t(seed), std::uint64_t(b)};
        std::mt19937_64 rng(sq);
        std::normal_distribution<double> N01;
        std::int64_t n = samples * (b + 1) / nb - samples * b / nb;
        Compensated<double> acc;
        std::vector<double> x(std::size_t(d), 0.0);
        for (std::int64_t i = 0; i < n; ++i) {
            double r2 = 0;
            for (auto& v : x) { v = N01(rng); r2 += v * v; }
            double r = std::sqrt(r2), w = 1;
            for (int j = 0; j < d; ++j) w *= std::pow(std::fabs(x[std::size_t(j)]) / r, -lambda[std::size_t(j)]);
            acc.add(w);
        }
        return acc.value();
    }, parallel) / double(samples);
    return sphere_area(d) * mean;
}

PhiAudit phi_mellin_audit(const std::vector<double>& l, const std::vector<double>& t_grid) {
    PhiAudit a;
    const int d = int(l.size());
    const double l1 = *std::min_element(l.begin(), l.end());
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        double t = t_grid[i];
        if (t < 1) throw std::invalid_argument("t grid must be >= 1");
        double p = phi_diag(l, t);
        if (!std::isfinite(p) || p <= 0) throw ConvergenceError("phi quadrature failed");
        a.t.push_back(t);
        a.ratio.push_back(p * std::pow(t, d - 1 + l1 / 2));
        a.max_ratio = std::max(a.max_ratio, a.ratio.back());
        if (2 * i >= t_grid.size()) {
            lx.push_back(std::log(t));
            ly.push_back(std::log(p));
        }
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) { mx += lx[i]; my += ly[i]; }
    mx /= double(lx.size());
    my /= double(ly.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    a.slope = sxx > 0 ? sxy / sxx : 0;
    return a;
}

LatticeAudit bound_audits(const EmbeddedLattice& L, const EmbeddedLattice& L0, const std::vector<double>& l, double R) {
    LatticeAudit a{};
    const int d = L.d;
    auto th = theta(L, l, R);
    a.theta_value = th.value;
    a.theta_tail = th.tail_bound;
    a.r = th.r;
    a.r0 = r_lattice(L0);
    a.covol = L.covolume();
    a.covol0 = L0.covolume();
    const double l1 = *std::min_element(l.begin(), l.end()), ld = *std::max_element(l.begin(), l.end());
    double scale = std::pow(1 + a.r0, d * ld / 2) / a.covol0 * std::pow(a.covol, (1 - l1 / 2) / d);
    a.theta_est_ratio = a.theta_value / scale;
    a.ball_bound_rhs = (I_total(l) - I_ball(l, a.r)) / I_ball(l, a.r0);
    a.ball_bound_holds = a.theta_value - a.theta_tail <= a.ball_bound_rhs;
    a.minkowski_lower = unit_ball_volume(d) * std::pow(a.r, d);
    a.norm_upper = std::pow(2 / std::sqrt(double(d)), d) * std::pow(a.r, d);
    a.sandwich_holds = a.minkowski_lower <= a.covol * (1 + 1e-12) && L.norm.get_d() <= a.norm_upper * (1 + 1e-12);
    return a;
}

double submultiplicativity_check(const std::vector<double>& l, int pairs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-50, 50);
    const int d = int(l.size());
    int ok = 0;
    for (int i = 0; i < pairs; ++i) {
        double x[2], y[2], s[2];
        for (int j = 0; j < d; ++j) {
            x[j] = U(rng);
            y[j] = U(rng);
            s[j] = x[j] + y[j];
        }
        if (f_weight(l, s, d) >= f_weight(l, x, d) * f_weight(l, y, d) * (1 - 1e-14)) ++ok;
    }
    return double(ok) / pairs;
}

long divisor_count_coprime(std::int64_t n, std::int64_t B) {
    n = n < 0 ? -n : n;
    if (n == 0) throw std::invalid_argument("divisor count of 0");
    long d = 1;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (B % p) d *= e + 1;
    }
    if (n > 1 && B % n) d *= 2;
    return d;
}

double divisor_bound_constant(double delta) {
    if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta in (0,1)");
    // d(n)/n^delta = prod_p (e+1)/p^{e delta}; only p < 2^{1/delta} can exceed 1
    const long P = long(std::ceil(std::pow(2.0, 1 / delta)));
    std::vector<char> comp(std::size_t(P) + 1, 0);
    double c = 1;
    for (long p = 2; p <= P; ++p) {
        if (comp[std::size_t(p)]) continue;
        for (long q = p * p; q <= P; q += p) comp[std::size_t(q)] = 1;
        double best = 1, lp = std::log(double(p));
        for (int e = 1; e < 200; ++e) best = std::max(best, (e + 1) / std::exp(e * delta * lp));
        c *= best;
    }
    return c;
}

FIValue fI(const Field& F, int l, std::int64_t N, std::int64_t B, double e, double R, ArchChar eps, double tol,
           bool parallel) {
    if (F.m != 1) throw UnsupportedField("fI is implemented over Q");
    if (N < 1 || B < 1) throw std::invalid_argument("N, B must be positive");
    if (std::gcd(N, B) != 1) throw CoprimalityError("n and b must be relatively prime");
    if (l < 6 || l % 2) throw std::invalid_argument("fI needs even l >= 6");
    const std::int64_t K0 = std::int64_t(std::floor(R * double(B) / double(N)));
    auto term = [&](std::int64_t k) -> double {
        if (k == 0 || N * k == -B) return 0.0;
        const double b = double(N) * double(k) / double(B);
        long t = divisor_count_coprime(N * k, B) * divisor_count_coprime(N * k + B, B);
        double J = std::abs(j_arch(l, b, eps));
        return double(t) * double(t) * std::pow(std::fabs(b * (b + 1)), e) * J;
    };
    FIValue out{blocked_sum<double>(-K0, K0 + 1, term, parallel), 0, long(2 * K0)};
    // tail |b| > R: tau <= C^2 (B^2 x (x+1))^delta, |J| <= K_J (x-1)^{-l/2}
    const double Rt = std::max(R, 3.0), h = l / 2.0;
    if (eps == ArchChar::Sign && R >= 1) return out;  // J^sgn vanishes for b(b+1) > 0
    const double KJ = 2 * std::exp(2 * std::lgamma(h) - std::lgamma(double(l))) * gauss_2f1(l, 1 / Rt);
    double best = std::numeric_limits<double>::infinity();
    for (double delta = 0.1; delta < 0.5; delta += 0.05) {
        double a = h - 4 * delta - 2 * e;
        if (a <= 1) continue;
        double C = divisor_bound_constant(delta);
        double per = std::pow(C, 4) * std::pow(double(B), 4 * delta) * KJ * std::pow(4.0 / 3, 2 * delta + e) * std::pow(1.5, h);
        double k1 = double(K0 + 1);
        double sum = 2 * std::pow(double(N) / double(B), -a) * std::pow(k1, 1 - a) * (1 / k1 + 1 / (a - 1));
        best = std::min(best, per * sum);
    }
    out.tail_bound = best;
    if (tol > 0 && out.tail_bound > tol) throw TailTooLarge("fI tail bound exceeds tolerance");
    return out;
}

}  // namespace rtf
