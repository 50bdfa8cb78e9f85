#include "helpers.hpp"

#include "rtf/orbital_arch.hpp"
#include "rtf/orbital_local.hpp"

using namespace rtf;

TEST_CASE("Lambda_v") {
    CHECK(lambda_v(LocalPoint::make(1, 0)) == 2);
    CHECK(lambda_v(LocalPoint::make(-1, -1)) == 0);
    CHECK(lambda_v(LocalPoint::make(0, 0)) == 1);
    CHECK_THROWS(LocalPoint::make(-2, 0));
    CHECK(tau_S({{LocalPoint::make(1, 0), 0}, {LocalPoint::make(0, 2), 0}}) == 6);
}

TEST_CASE("tilde delta") {
    CHECK(tilde_delta(0, 2, 1) == -3);
    // sign convention follows the shell integral it evaluates
    CHECK(tilde_delta(0, 2, -1) == -1);
    CHECK(tilde_delta(0, 2, -1) == shell_level_sum(0, 2, -1));
    CHECK(tilde_delta(1, 0, -1) == 1);
}

TEST_CASE("tilde I+ closed form equals its shell sum") {
    for (int m = 0; m <= 5; ++m)
        for (int o = -3; o <= 6; ++o)
            for (int eta : {-1, 1})
                CHECK(tilde_I_plus(m, o, 3, eta, Rational(1) / 2) == tilde_I_plus_shell(m, o, 3, eta, Rational(1) / 2));
    // m = 1, ord b >= 1: only the l = 0 level survives
    ScaledLog expect = ScaledLog(FormalLog::log_of(5)) * ScaledLog::half_power(5, -1) *
                       ScaledLog(-tilde_delta(1, 2, -1) - 2 * tilde_delta(0, 2, -1));
    CHECK(tilde_I_plus(1, 2, 5, -1) == expect);
}

TEST_CASE("W_hecke needs an I+ oracle for m > 0") {
    CHECK_THROWS_AS(W_hecke_basis(2, LocalPoint::generic(1), 3, -1, nullptr), MissingOracle);
    CHECK_NOTHROW(W_hecke_basis(0, LocalPoint::generic(1), 3, -1, nullptr));
    for (int m = 0; m <= 4; ++m)
        for (int o = -1; o <= 5; ++o) {
            LocalPoint b = LocalPoint::generic(o);
            double w = std::fabs(W_hecke_basis(m, b, 3, -1, shell_iplus_oracle).eval());
            CHECK(w <= 10 * W_hecke_bound_shape(m, b, 3) + 1e-12);
        }
}

TEST_CASE("W_unramified") {
    CHECK(W_unramified(LocalPoint::make(0, 0), 3, 1).is_zero());
    CHECK(W_unramified(LocalPoint::make(2, 0), 3, 1) == FormalLog::log_of(3, -3));
    for (int eta : {-1, 1})
        CHECK(W_unramified(LocalPoint::make(0, 2), 3, eta) == FormalLog::log_of(3, -tilde_delta(0, 2, eta)));
    for (long q : {2L, 3L, 5L})
        for (int eta : {-1, 1})
            for (int o = -12; o <= 12; ++o) {
                LocalPoint b = LocalPoint::generic(o);
                CHECK(W_unramified(b, q, eta) == W_unramified_oracle(b, q, eta));
                if (o == 0) {
                    LocalPoint c = LocalPoint::make(0, 3);
                    CHECK(W_unramified(c, q, eta) == W_unramified_oracle(c, q, eta));
                }
            }
}

TEST_CASE("W_level") {
    CHECK(W_level(LocalPoint::make(0, 0), 1, 3, 1).is_zero());
    CHECK(W_level(LocalPoint::make(2, 0), 1, 3, 1) == FormalLog::log_of(3, -3));
    CHECK(W_level(LocalPoint::make(2, 0), 1, 3, -1) == FormalLog::log_of(3, -1));
    for (long q : {2L, 3L, 5L})
        for (int eta : {-1, 1})
            for (int n = 1; n <= 6; ++n)
                for (int o = -12; o <= 12; ++o) {
                    LocalPoint b = LocalPoint::generic(o);
                    CHECK(W_level(b, n, q, eta, 2) == W_level_oracle(b, n, q, eta, 2));
                }
}

TEST_CASE("W_ramified") {
    CHECK(W_ramified(LocalPoint::make(-2, -2), 1, 3, 1, 1).is_zero());
    for (int em : {-1, 1})
        CHECK(W_ramified(LocalPoint::make(0, 0), 1, 3, em, 1) == ScaledLog(FormalLog::log_of(3, -em)));
    for (int f = 1; f <= 3; ++f)
        for (int o = -4; o <= 6; ++o) {
            LocalPoint b = LocalPoint::generic(o);
            CHECK(std::fabs(W_ramified(b, f, 5, -1, 1).eval()) <= W_ramified_bound_shape(b, f, 5) * 6 + 1e-12);
        }
}

TEST_CASE("Legendre and Gauss 2F1") {
    CHECK(legendre(0, 0.3) == 1);
    CHECK(legendre(1, 0.0) == 0);
    CHECK(gauss_2f1(4, 0.0) == 1);
    auto s = gauss_2f1_series(4, 0.5);
    CHECK(s.tail_bound < 1e-12);
    CHECK(gauss_2f1(4, 0.5) == doctest::Approx(s.value).epsilon(1e-12));
    CHECK(gauss_2f1(4, 0.5) == doctest::Approx(1.90659700031606).epsilon(1e-12));
}

TEST_CASE("archimedean J") {
    CHECK(j_arch(6, 2.0, ArchChar::Sign) == std::complex<double>(0));
    CHECK(std::abs(j_arch(4, -0.5, ArchChar::Sign)) < 1e-14);
    CHECK(j_arch(4, -0.5, ArchChar::Trivial).real() == doctest::Approx(-4));
    for (double b : {0.3, 2.0, 7.5})
        CHECK(j_arch(6, -b - 1, ArchChar::Trivial).real() == doctest::Approx(-j_one_direct(6, b)).epsilon(1e-10));
}

TEST_CASE("W_+ against the defining integral") {
    for (auto [l, b] : std::vector<std::pair<int, double>>{{6, 1.0}, {8, 2.0}, {10, -3.0}, {6, 1.0 / 3}}) {
        auto w = w_plus(l, b);
        auto q = w_plus_quad(l, b);
        CHECK(std::abs(w - q.value) <= 1e-6 * std::abs(q.value));
    }
    CHECK(std::abs(w_plus(6, -0.5)) < 1e-12);
    auto w = w_plus(6, 1.0);
    CHECK(w_eps(6, 1.0, ArchChar::Trivial).real() == doctest::Approx(2 * w.real()));
    CHECK(w_eps(6, 1.0, ArchChar::Sign).imag() == doctest::Approx(2 * w.imag()));
}

TEST_CASE("W_eps decay") {
    auto fit = arch_bound_fit([](double b) { return std::abs(w_eps(8, b, ArchChar::Trivial)); }, 8, 0.1);
    CHECK(std::isfinite(fit.C));
    CHECK(fit.outer_growth <= 1.5);
}
