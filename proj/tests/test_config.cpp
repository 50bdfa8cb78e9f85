#include "helpers.hpp"

using namespace rtf;
using namespace rtf::test;

TEST_CASE("config round trip") {
    AssemblyConfig c = small_config();
    AssemblyConfig d = parse_config(config_to_json(c));
    CHECK(d.primes.size() == c.primes.size());
    CHECK(d.eta.eps() == 1);
    CHECK(d.eta.unram == c.eta.unram);
    CHECK(d.consts.L_fin == doctest::Approx(0.7));
    CHECK(d.w.l == std::vector<int>{6});
}

TEST_CASE("config validation") {
    json j = config_to_json(small_config());
    json bad = j;
    bad["schema"] = 2;
    CHECK_THROWS(parse_config(bad));
    bad = j;
    bad["eta"]["eps"] = 0;
    CHECK_THROWS(parse_config(bad));
    bad = j;
    bad["eta"]["unram"]["zz"] = 1;
    CHECK_THROWS(parse_config(bad));
    bad = j;
    bad["weights"]["l"] = {6, 6};
    CHECK_THROWS(parse_config(bad));
}

TEST_CASE("FormalLog json view") {
    json j = to_json(FormalLog::log_of(12, Rational(1) / 2) + FormalLog(Rational(3)));
    CHECK(j["const"] == "3");
    CHECK(j["coeffs"]["log2"] == "1");
    CHECK(j["coeffs"]["log3"] == "1/2");
}
