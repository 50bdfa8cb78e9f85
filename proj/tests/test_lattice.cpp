#include "helpers.hpp"

#include "rtf/lattice.hpp"

#include <numbers>

using namespace rtf;
using std::numbers::pi;

TEST_CASE("embedding ideals") {
    auto Z = embed_ideal(Field::parse("Q"), "O");
    CHECK(Z.d == 1);
    CHECK(Z.covolume() == doctest::Approx(1));
    CHECK(r_lattice(Z) == doctest::Approx(0.5));
    auto O2 = embed_ideal(Field::parse("Q(sqrt2)"), "O");
    CHECK(O2.covolume() == doctest::Approx(2 * std::sqrt(2.0)));
    CHECK(r_lattice(O2) == doctest::Approx(std::sqrt(2.0) / 2));
    auto N = embed_ideal(Field::parse("Q"), "7");
    CHECK(N.covolume() == doctest::Approx(7));
    CHECK(r_lattice(N) == doctest::Approx(3.5));
    auto O5 = embed_ideal(Field::parse("Q(sqrt 5)"), "O");
    CHECK(O5.covolume() == doctest::Approx(std::sqrt(5.0)));
    auto P = embed_ideal(Field::parse("Q(sqrt2)"), "sqrt^3*(1,1)");
    CHECK(P.norm == 8);
    CHECK_THROWS_AS(Field::parse("Q(sqrt4)"), UnsupportedField);
    CHECK_THROWS_AS(Field::parse("Q(i)"), UnsupportedField);
}

TEST_CASE("enumeration matches the box reference") {
    for (auto [f, d] : std::vector<std::pair<std::string, std::string>>{
             {"Q(sqrt2)", "O"}, {"Q(sqrt5)", "(2,1)"}, {"Q(sqrt3)", "sqrt*2"}, {"Q", "3"}}) {
        auto L = embed_ideal(Field::parse(f), d);
        auto a = enumerate_points(L, 30), b = enumerate_box(L, 30);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        CHECK(enumerate_points(L, 30, true) == enumerate_points(L, 30, false));
    }
}

TEST_CASE("theta over Z and 2Z") {
    auto Z = embed_ideal(Field::parse("Q"), "O");
    auto t = theta(Z, {4}, 1e4);
    CHECK(std::fabs(t.value - 2 * (pi * pi / 6 - 1)) <= t.tail_bound + 1e-12);
    CHECK(t.tail_bound < 1e-6);
    auto t2 = theta(scale_lattice(Z, 2), {4}, 1e4);
    CHECK(std::fabs(t2.value - (pi * pi / 4 - 2)) <= t2.tail_bound + 1e-12);
    CHECK_THROWS_AS(theta(Z, {4}, 10, 1e-30), TailTooLarge);
}

TEST_CASE("theta over Z[sqrt2] is stable under doubling R") {
    auto L = embed_ideal(Field::parse("Q(sqrt2)"), "O");
    auto a = theta(L, {6, 6}, 40), b = theta(L, {6, 6}, 80);
    CHECK(std::fabs(a.value - b.value) <= a.tail_bound + b.tail_bound);
    CHECK(theta_partial(L, {6, 6}, 60, true) == theta_partial(L, {6, 6}, 60, false));
}

TEST_CASE("sphere integrals") {
    CHECK(sphere_I({0, 0}, SphereMode::Closed) == doctest::Approx(2 * pi));
    CHECK(sphere_I({0, 0, 0}, SphereMode::Closed) == doctest::Approx(4 * pi));
    CHECK(sphere_I({0.5, 0}, SphereMode::Quad) == doctest::Approx(sphere_I({0.5, 0}, SphereMode::Closed)).epsilon(1e-6));
    CHECK(sphere_I({0.3, -0.4, 0.2}, SphereMode::Quad) ==
          doctest::Approx(sphere_I({0.3, -0.4, 0.2}, SphereMode::Closed)).epsilon(1e-6));
    CHECK_THROWS_AS(sphere_I({1.0, 0}, SphereMode::Closed), DomainError);
    double a = sphere_I({0.2, 0.1, 0.0}, SphereMode::MonteCarlo, 200000, 9, true);
    double b = sphere_I({0.2, 0.1, 0.0}, SphereMode::MonteCarlo, 200000, 9, false);
    CHECK(a == b);
}

TEST_CASE("fI over Q") {
    auto empty = fI(Field::parse("Q"), 6, 1'000'000, 1, 0.1, 10, ArchChar::Trivial);
    CHECK(empty.value == 0);
    double prev = 1e300;
    for (long N : {2L, 5L, 20L, 100L}) {
        auto v = fI(Field::parse("Q"), 6, N, 1, 0.1, 2000, ArchChar::Trivial);
        CHECK(v.value < prev);
        prev = v.value;
    }
    CHECK_THROWS_AS(fI(Field::parse("Q(sqrt2)"), 6, 2, 1, 0.1, 10, ArchChar::Trivial), UnsupportedField);
}

TEST_CASE("submultiplicativity and lattice bounds") {
    CHECK(submultiplicativity_check({6, 6}, 10000, 3) == 1.0);
    CHECK(submultiplicativity_check({8}, 10000, 4) == 1.0);
    auto F = Field::parse("Q(sqrt2)");
    auto L0 = embed_ideal(F, "O");
    for (auto d : {"O", "2", "3*sqrt", "(3,1)^2"}) {
        auto a = bound_audits(embed_ideal(F, d), L0, {6, 6}, 40);
        CHECK(a.ball_bound_holds);
        CHECK(a.sandwich_holds);
    }
}

TEST_CASE("phi along the diagonal") {
    for (double t : {0.5, 3.0, 40.0}) CHECK(phi_diag({6}, t) == doctest::Approx(2 * std::pow(1 + t, -3.0)));
    std::vector<double> grid;
    for (double t = 1; t <= 1000; t *= 1.5) grid.push_back(t);
    auto a = phi_mellin_audit({6, 6}, grid);
    CHECK(std::isfinite(a.max_ratio));
    CHECK(std::fabs(a.slope + 4) <= 0.2);
}

TEST_CASE("divisor counts") {
    CHECK(divisor_count_coprime(360, 1) == 24);
    CHECK(divisor_count_coprime(360, 2) == 6);
    CHECK(divisor_bound_constant(0.25) >= 1);
}
