#include "helpers.hpp"

#include "rtf/testfns.hpp"

using namespace rtf;

TEST_CASE("Chebyshev polynomials X_n") {
    CHECK(chebyshev(0, 0.7) == 1);
    CHECK(chebyshev(1, 0.7) == doctest::Approx(0.7));
    CHECK(chebyshev(2, 0.0) == doctest::Approx(-1));
    for (int n = 0; n < 12; ++n) CHECK(chebyshev(n, 2.0) == doctest::Approx(n + 1));
}

TEST_CASE("Hecke test functions in the alpha^(m) basis") {
    auto d2 = decompose_alpha(2);
    CHECK(laurent_hecke(2) == std::map<int, long>{{-2, 1}, {0, 1}, {2, 1}});
    CHECK(d2.constant == -1);
    auto d1 = decompose_alpha(1);
    CHECK(d1.constant == 0);
    CHECK(laurent_decomposition(d1) == laurent_hecke(1));
    auto d3 = decompose_alpha(3);
    CHECK(d3.coeff.at(3) == 1);
    CHECK(d3.coeff.at(1) == 1);
    for (int n = 0; n < 15; ++n) CHECK(laurent_decomposition(decompose_alpha(n)) == laurent_hecke(n));
}

TEST_CASE("unipotent moments") {
    for (int eta : {-1, 1}) CHECK(unip_U(3, eta, 0) == doctest::Approx(-1));
    CHECK(unip_U(3, -1, 1) == 0);
    CHECK(unip_dU(3, -1, 2) == doctest::Approx(std::log(3.0) / 3));
    auto m = unip_moments(3, -1, 2);
    CHECK(m.dU == ScaledLog(FormalLog::log_of(3, Rational(1) / 3)));
}

TEST_CASE("dunip") {
    CHECK(dunip(3, -1, 0).is_zero());
    CHECK(dunip(3, -1, 2) == ScaledLog(FormalLog::log_of(3, Rational(1) / 3)));
    CHECK(dunip(3, 1, 2) == ScaledLog(FormalLog::log_of(3)));
}

TEST_CASE("period integrals reproduce the closed forms") {
    auto u = period_integral(UnipKernel::Upsilon, 3, 1, LocalTestFn::hecke(0));
    CHECK(std::abs(u - std::complex<double>(-1)) < 1e-10);
    auto d0 = period_integral(UnipKernel::DunipKernel, 3, -1, LocalTestFn::basis(0));
    CHECK(std::abs(d0) < 1e-10);
    auto d2 = period_integral(UnipKernel::DunipKernel, 3, -1, LocalTestFn::basis(2));
    CHECK(std::abs(d2 - std::log(3.0) / 3) < 1e-9);
}

TEST_CASE("period trapezoid: serial equals parallel") {
    auto a = period_trapezoid(UnipKernel::UpsilonOverUnip, 5, -1, LocalTestFn::hecke(4), 1.0, 4096, false);
    auto b = period_trapezoid(UnipKernel::UpsilonOverUnip, 5, -1, LocalTestFn::hecke(4), 1.0, 4096, true);
    CHECK(a == b);
}

TEST_CASE("moments of the local measures") {
    for (long q : {2L, 3L, 7L}) {
        CHECK(st_moment(q, 1, 0) == doctest::Approx(1).epsilon(1e-10));
        CHECK(st_moment(q, -1, 2) == doctest::Approx(1.0 / q).epsilon(1e-9));
        CHECK(st_moment(q, 1, 1) == doctest::Approx(2 / std::sqrt(double(q))).epsilon(1e-9));
    }
}

TEST_CASE("Chebyshev truncation of a smooth bump") {
    auto chi = [](double x) { return std::fabs(x) < 2 ? std::exp(-1.0 / (4.0 - x * x)) : 0.0; };
    auto t = cheb_truncate(chi, 40);
    CHECK(t.coeff[0] == doctest::Approx(cheb_coefficient(chi, 0)));
    // n^5 |c(n)| stays bounded: the upper window does not outgrow the lower one
    double lo = 0, hi = 0;
    for (int n = 10; n <= 25; ++n) lo = std::max(lo, std::fabs(t.coeff[n]) * std::pow(n, 5));
    for (int n = 26; n <= 40; ++n) hi = std::max(hi, std::fabs(t.coeff[n]) * std::pow(n, 5));
    CHECK(hi <= 1.5 * lo);
    auto t10 = cheb_truncate(chi, 10), t20 = cheb_truncate(chi, 20);
    CHECK(t20.sup_error < t10.sup_error);
}
