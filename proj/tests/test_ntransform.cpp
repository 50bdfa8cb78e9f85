#include "helpers.hpp"

using namespace rtf;
using namespace rtf::test;

TEST_CASE("N-transform of the constant function") {
    CHECK(n_transform(ArithFn::constant(1), id({{P3, 2}})) == FormalLog(Rational(5) / 6));
    CHECK(n_transform(ArithFn::constant(1), id({{P3, 1}, {Q7, 1}})) == FormalLog(1));
}

TEST_CASE("N-transform of log N") {
    FormalLog v = n_transform(ArithFn::log_norm(), id({{P3, 2}}));
    CHECK(v == FormalLog::log_of(3, 2));
    CHECK(closed_log(id({{P3, 2}})) == v);
    Ideal n = id({{P2, 2}, {Q3, 2}});
    CHECK(closed_log(n) == n_transform(ArithFn::log_norm(), n));
    Ideal sf = id({{P3, 1}, {Q7, 1}});
    CHECK(closed_log(sf) == FormalLog::log_of(21));
}

TEST_CASE("convolve_omega and the inversion round trip") {
    CHECK(convolve_omega(ArithFn::constant(1), id({{P3, 2}})) == FormalLog(Rational(7) / 6));
    ArithFn A = ArithFn::norm_power(1);
    Ideal sf = id({{P3, 1}, {Q7, 1}});
    CHECK(convolve_omega(A, sf) == A(sf));
    std::map<Ideal, FormalLog> F;
    Ideal top = id({{P3, 4}, {Q7, 3}});
    for (auto& m : divisors(top)) F[m] = convolve_omega(A, m);
    ArithFn Fn{[&](const Ideal& m) { return F.at(m); }, {}};
    for (auto& m : divisors(top)) CHECK(n_transform(Fn, m) == A(m));
}

TEST_CASE("closed power form") {
    Ideal n = id({{P3, 2}});
    CHECK(closed_power(n, 0) == Rational(5) / 6);
    CHECK(closed_power(n, 1) == Rational(53) / 6);
    Ideal sf = id({{P3, 1}, {Q7, 1}});
    CHECK(closed_power(sf, 2) == 441);
    for (int t : {-1, 0, 1, 2})
        for (auto& m : divisors(id({{P3, 3}, {Q7, 2}, {S5, 1}})))
            CHECK(FormalLog(closed_power(m, t)) == n_transform(ArithFn::norm_power(t), m));
}

TEST_CASE("N+ transform") {
    CHECK(n_plus(ArithFn::constant(1), id({{P3, 2}})) == FormalLog(Rational(7) / 6));
    CHECK(n_plus_closed(id({{P3, 2}}), 0) == Rational(7) / 6);
    CHECK(n_plus_closed(id({{P3, 1}, {Q7, 1}}), 0) == 1);
    for (auto& m : divisors(id({{P3, 4}, {Q7, 2}})))
        CHECK(FormalLog(n_plus_closed(m, -1)) == n_plus(ArithFn::norm_power(-1), m));
}

TEST_CASE("irrational norm powers are refused") {
    CHECK_THROWS_AS(closed_power(id({{P3, 1}}), Rational(1) / 2), NonRationalPower);
    CHECK(closed_power_real(id({{P3, 1}}), 0.5) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("domain errors propagate") {
    ArithFn B = ArithFn::constant(1);
    B.in_domain = [](const Ideal& m) { return !m.is_unit(); };
    CHECK_THROWS_AS(n_transform(B, id({{P3, 2}})), DomainError);
}

TEST_CASE("serial and parallel transforms agree") {
    Ideal n = id({{P3, 2}, {Q7, 2}, {S5, 4}, {P2, 2}});
    CHECK(n_transform(ArithFn::log_norm(), n, true) == n_transform(ArithFn::log_norm(), n, false));
}
