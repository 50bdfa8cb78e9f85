#pragma once

#include "rtf/config.hpp"

#include "doctest.h"

namespace rtf::test {

inline const Prime P3{"p", 3}, P2{"p2", 2}, Q7{"q", 7}, Q3{"q3", 3}, S5{"s", 5};

inline Ideal id(std::initializer_list<std::pair<Prime, int>> e) {
    std::map<Prime, int> m;
    for (auto& [p, k] : e) m[p] = k;
    return Ideal(m);
}

// one sign place, p and q inert, s split, r ramified
inline AssemblyConfig small_config(int eps = 1) {
    json j = json::parse(R"({
      "schema": 1,
      "primes": [{"id":"p","q":3},{"id":"q","q":7},{"id":"s","q":5},{"id":"r","q":2}],
      "eta": {"arch_signs": [1], "ram": {"r": 2}, "unram": {"p": -1, "q": -1, "s": 1}},
      "weights": {"l": [6]},
      "consts": {"D_F": 5, "L_fin": "7/10", "LpL": "-1/3", "G_abs": 2}
    })");
    j["eta"]["arch_signs"] = eps ? json::array({-1}) : json::array({1});
    return parse_config(j);
}

}  // namespace rtf::test

namespace doctest {
template <>
struct StringMaker<rtf::FormalLog> {
    static String convert(const rtf::FormalLog& f) { return f.str().c_str(); }
};
template <>
struct StringMaker<rtf::ScaledLog> {
    static String convert(const rtf::ScaledLog& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<rtf::Rational> {
    static String convert(const rtf::Rational& r) { return r.get_str().c_str(); }
};
}  // namespace doctest
