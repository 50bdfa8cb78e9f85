// lattice.hpp - theta sums of embedded ideals, sphere integrals, the lattice sum fI, and bound audits
#pragma once

#include "rtf/orbital_arch.hpp"

#include <array>
#include <cstdint>

namespace rtf {

class UnsupportedField : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class TailTooLarge : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Q (m = 1) or Q(sqrt m), m squarefree > 1
struct Field {
    long m = 1;
    int degree() const { return m == 1 ? 1 : 2; }
    long discriminant() const { return m == 1 ? 1 : (m % 4 == 1 ? m : 4 * m); }
    static Field parse(const std::string& s);  // "Q", "Q(sqrt2)", "Q(sqrt 5)"
    std::string str() const;
};

struct EmbeddedLattice {
    Field field;
    int d = 1;
    std::array<std::array<double, 2>, 2> basis{};  // rows are generators
    Rational norm = 1;                           // N(Lambda)
    std::string provenance;
    double covolume() const;
};

// Q: "O", "N", "a/b"; Q(sqrt m): '*'-product of integers, "sqrt" (= sqrt m) and "(x,y)" (= x + y sqrt m), each with ^k
EmbeddedLattice embed_ideal(const Field& F, const std::string& descriptor);
EmbeddedLattice scale_lattice(const EmbeddedLattice& L, long N);

// nonzero points with ||x|| <= R, integer coordinates in the basis
std::vector<std::array<long, 2>> enumerate_points(const EmbeddedLattice& L, double R, bool parallel = true);
// brute-force box reference for completeness tests
std::vector<std::array<long, 2>> enumerate_box(const EmbeddedLattice& L, double R);
std::array<double, 2> embed_point(const EmbeddedLattice& L, const std::array<long, 2>& c);

double f_weight(const std::vector<double>& l, const double* x, int d);
// partial theta sum over 0 < ||x|| <= R
double theta_partial(const EmbeddedLattice& L, const std::vector<double>& l, double R, bool parallel = true);

struct ThetaValue {
    double value;       // partial sum (+ Euler-Maclaurin tail for d = 1)
    double tail_bound;  // rigorous bound on |theta - value|
    double r;
    double covolume;
};
ThetaValue theta(const EmbeddedLattice& L, const std::vector<double>& l, double R, double tol = -1,
                 bool parallel = true);

double r_lattice(const EmbeddedLattice& L);  // half the minimal norm
double unit_ball_volume(int d);
double sphere_area(int d);  // vol(S^{d-1})

enum class SphereMode { Closed, Quad, MonteCarlo };
double sphere_I(const std::vector<double>& lambda, SphereMode mode, long samples = 10'000'000,
                std::uint64_t seed = 12345, bool parallel = true);

// phi(t,...,t) = int_{S^{d-1}} f(t omega) dmu, d <= 2
double phi_diag(const std::vector<double>& l, double t);
struct PhiAudit {
    std::vector<double> t, ratio;  // ratio = phi(t) t^{d-1+l_1/2}
    double max_ratio = 0;
    double slope = 0;  // regression of log phi on log t over the upper half of the grid
};
PhiAudit phi_mellin_audit(const std::vector<double>& l, const std::vector<double>& t_grid);

// I(B_rho) and I(R^d) for f
double I_ball(const std::vector<double>& l, double rho);
double I_total(const std::vector<double>& l);

struct LatticeAudit {
    double theta_value, theta_tail;
    double r, r0, covol, covol0;
    double theta_est_ratio;  // theta / [(1+r0)^{d l_d/2} D0^{-1} D^{(1-l_1/2)/d}]
    bool ball_bound_holds;           // theta <= I(B_{Lambda0})^{-1} I(R^d - B_Lambda)
    double ball_bound_rhs;
    double minkowski_lower;  // C_d r^d (<= D)
    double norm_upper;       // (2/sqrt d)^d r^d (>= N(Lambda))
    bool sandwich_holds;
};
LatticeAudit bound_audits(const EmbeddedLattice& L, const EmbeddedLattice& L0, const std::vector<double>& l,
                          double R);
// fraction of random pairs with f(x+y) >= f(x) f(y) (should be 1)
double submultiplicativity_check(const std::vector<double>& l, int pairs, std::uint64_t seed);

// number of divisors of the part of |n| prime to B
long divisor_count_coprime(std::int64_t n, std::int64_t B);

struct FIValue {
    double value;
    double tail_bound;
    long terms;
};
// fI over Q: sum over b in N B^{-1} Z - {0,-1}, |b| <= R, of tau(b)^2 |b(b+1)|^e |J^eps(l;b)|
FIValue fI(const Field& F, int l, std::int64_t N, std::int64_t B, double e, double R, ArchChar eps,
           double tol = -1, bool parallel = true);
// d(n) <= C(delta) n^delta
double divisor_bound_constant(double delta);

}  // namespace rtf
