#include "helpers.hpp"

#include "rtf/spectral.hpp"

using namespace rtf;
using namespace rtf::test;

namespace {
LocalRepData rep0(Rational Q, long q = 3) { return {0, q, Q, 1}; }
LocalRepData repc(int c, long q = 3, int chi = 1) { return {c, q, 0, chi}; }
}  // namespace

TEST_CASE("Q_j polynomials") {
    Rational X = Rational(2) / 7;
    CHECK(q_poly(0, rep0(Rational(1) / 3), -1, X) == 1);
    CHECK(q_poly(1, repc(2), -1, X) == -X);
    CHECK(q_poly(1, rep0(Rational(1) / 3), -1, X) == -X - Rational(1) / 3);
    CHECK(q_poly(1, rep0(Rational(1) / 3), 1, X) == X - Rational(1) / 3);
}

TEST_CASE("tau(j,j)") {
    Rational Q = Rational(1) / 3;
    CHECK(tau_jj(0, rep0(Q)) == 1);
    CHECK(tau_jj(3, repc(1)) == Rational(8) / 9);
    CHECK(tau_jj(2, rep0(Q)) == (1 - Q * Q) * Rational(8) / 9);
}

TEST_CASE("r^(z) closed forms") {
    Rational X = Rational(3) / 5;
    CHECK(r_z_closed(repc(2), -1, 2, X) == 1 - X + X * X);
    CHECK(r_z_closed(repc(3), -1, 1, Rational(1)) == 0);
    CHECK(r_z_closed(rep0(Rational(1) / 3), -1, 2, Rational(1)) == Rational(4) / 2);
    CHECK(r_z_closed(rep0(Rational(1) / 3, 5), -1, 2, Rational(1)) == Rational(6) / 4);
}

TEST_CASE("r^(z) closed form equals the defining sum") {
    for (int c : {0, 1, 2, 3})
        for (int eta : {-1, 1})
            for (int chi : {-1, 1})
                for (int k = 1; k <= 8; ++k)
                    for (Rational X : std::vector<Rational>{Rational(1) / 2, Rational(-3) / 7, Rational(5), Rational(1)}) {
                        LocalRepData r{c, 5, Rational(-2) / 9, chi};
                        CHECK(r_z_closed(r, eta, k, X) == r_z_sum(r, eta, k, X));
                    }
}

TEST_CASE("partial r") {
    CHECK(partial_r(repc(2), -1, 2) == 1);
    CHECK(partial_r(repc(2), 1, 2) == 3);
    CHECK(partial_r(rep0(Rational(1) / 3), -1, 2) == 2);
    CHECK(partial_r(rep0(Rational(-1) / 4, 7), -1, 2) == Rational(8) / 6);
}

TEST_CASE("partial r matches a finite difference of r^(z)") {
    const double h = 1e-5;
    for (int c : {0, 1, 2})
        for (int eta : {-1, 1})
            for (int k = 1; k <= 6; ++k) {
                LocalRep<double> r{c, 3, 0.3, 1};
                double fd = -(r_z_at(r, eta, k, {0.5 + h, 0}) - r_z_at(r, eta, k, {0.5 - h, 0})).real() /
                            (2 * h * std::log(3.0));
                CHECK(partial_r(r, eta, k) == doctest::Approx(fd).epsilon(1e-7));
            }
}

TEST_CASE("singular tau is rejected") {
    CHECK_THROWS_AS(r_z_closed(rep0(1), -1, 2, Rational(1)), SingularTau);
    CHECK_THROWS_AS(partial_r(rep0(-1), 1, 2), SingularTau);
}

TEST_CASE("w and dw") {
    QuadCharData eta{{-1}, {}, {{"p", -1}, {"q", -1}, {"s", 1}}};
    Ideal f = id({{P3, 2}});
    PiData pi{{P3, repc(2)}};
    auto a = w_and_dw(pi, f, f, eta);
    CHECK(a.w == 1);
    CHECK(a.dw.is_zero());

    auto b = w_and_dw(pi, f, id({{P3, 3}}), eta);
    CHECK(b.w == 0);

    auto c = w_and_dw(pi, f, id({{P3, 4}}), eta);
    CHECK(c.w == 1);
    CHECK(c.dw == FormalLog::log_of(3, -1));
    auto cp = w_and_dw_product(pi, f, id({{P3, 4}}), eta);
    CHECK(cp.w == c.w);
    CHECK(cp.dw == c.dw);

    PiData pi2{{P3, rep0(Rational(1) / 5)}, {Q7, repc(1, 7, -1)}};
    Ideal f2 = id({{Q7, 1}});
    for (auto& n : {id({{P3, 2}, {Q7, 3}}), id({{P3, 4}, {Q7, 1}}), id({{P3, 1}, {Q7, 2}})}) {
        auto x = w_and_dw(pi2, f2, n, eta), y = w_and_dw_product(pi2, f2, n, eta);
        CHECK(x.w == y.w);
        CHECK(x.dw == y.dw);
    }
    CHECK_THROWS_AS(w_and_dw({{S5, repc(2, 5)}}, Ideal(), id({{S5, 2}}), eta), InertViolation);
}

TEST_CASE("ADL+ epsilon factor") {
    CHECK(adl_plus_factor(Ideal(), Ideal()) == FormalLog::sym("logD", -1));
    CHECK(adl_plus_factor(id({{P3, 2}}), Ideal()) == FormalLog::log_of(3, -1) - FormalLog::sym("logD"));
}
