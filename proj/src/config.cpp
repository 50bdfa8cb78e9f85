// config.cpp
#include "rtf/config.hpp"

#include <fstream>

namespace rtf {

double number_of(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
    throw std::invalid_argument("expected a number or an \"a/b\" string");
}

Rational rational_of(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected an integer or an \"a/b\" string");
}

AssemblyConfig parse_config(const json& j) {
    if (!j.contains("schema") || j.at("schema").get<int>() != kSchemaVersion)
        throw std::invalid_argument("config: \"schema\" must be " + std::to_string(kSchemaVersion));
    AssemblyConfig c;
    for (auto& p : j.at("primes")) {
        Prime pr{p.at("id").get<std::string>(), p.at("q").get<long>()};
        if (pr.q < 2) throw std::invalid_argument("config: q must be >= 2 for " + pr.id);
        if (!c.primes.emplace(pr.id, pr).second) throw std::invalid_argument("config: duplicate prime id " + pr.id);
    }
    if (j.contains("eta")) {
        auto& e = j.at("eta");
        c.eta.arch_signs = e.value("arch_signs", std::vector<int>{1});
        const json ram = e.value("ram", json::object()), unram = e.value("unram", json::object());
        for (auto& [id, f] : ram.items()) c.eta.ram[id] = f.get<int>();
        for (auto& [id, t] : unram.items()) c.eta.unram[id] = t.get<int>();
        if (e.contains("eps") && e.at("eps").get<int>() != c.eta.eps())
            throw std::invalid_argument("config: eps disagrees with arch_signs");
    } else {
        c.eta.arch_signs = {1};
    }
    for (auto& [id, f] : c.eta.ram)
        if (!c.primes.count(id)) throw std::invalid_argument("config: undeclared ramified prime " + id);
    for (auto& [id, t] : c.eta.unram)
        if (!c.primes.count(id)) throw std::invalid_argument("config: undeclared prime " + id);
    c.eta.validate();
    if (j.contains("weights")) {
        auto& w = j.at("weights");
        c.w.l = w.at("l").get<std::vector<int>>();
        if (w.contains("l_tilde")) c.w.l_tilde_mod4 = int(((w.at("l_tilde").get<long>() % 4) + 4) % 4);
    } else {
        c.w.l.assign(c.eta.arch_signs.size(), 6);
    }
    c.w.validate();
    if (c.w.l.size() != c.eta.arch_signs.size()) throw std::invalid_argument("config: one weight per infinite place");
    if (j.contains("consts")) {
        auto& k = j.at("consts");
        for (auto& [name, v] : k.items()) {
            if (name == "D_F") c.consts.D_F = number_of(v);
            else if (name == "L_fin") c.consts.L_fin = number_of(v);
            else if (name == "LpL") c.consts.LpL = number_of(v);
            else if (name == "G_abs") c.consts.G_abs = number_of(v);
            else c.consts.extra[name] = number_of(v);
        }
    }
    c.consts.validate();
    return c;
}

AssemblyConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    return parse_config(json::parse(in));
}

json config_to_json(const AssemblyConfig& cfg) {
    json j;
    j["schema"] = kSchemaVersion;
    j["primes"] = json::array();
    for (auto& [id, p] : cfg.primes) j["primes"].push_back({{"id", id}, {"q", p.q}});
    j["eta"] = {{"eps", cfg.eta.eps()}, {"arch_signs", cfg.eta.arch_signs}, {"ram", cfg.eta.ram}, {"unram", cfg.eta.unram}};
    j["weights"] = {{"l", cfg.w.l}, {"l_tilde", cfg.w.i_power()}};
    j["consts"] = {{"D_F", cfg.consts.D_F}, {"L_fin", cfg.consts.L_fin}, {"LpL", cfg.consts.LpL}, {"G_abs", cfg.consts.G_abs}};
    for (auto& [k, v] : cfg.consts.extra) j["consts"][k] = v;
    return j;
}

json to_json(const FormalLog& f) {
    json c = json::object();
    for (auto& [k, v] : f.coeffs()) c[k] = to_string(v);
    return {{"const", to_string(f.constant())}, {"coeffs", c}, {"str", f.str()}};
}

json to_json(const ScaledLog& s, const std::map<std::string, double>& values) {
    json terms = json::array();
    for (auto& [m, f] : s.terms()) {
        json e = json::object();
        for (auto& [k, v] : m.exps) e[k] = to_string(v);
        terms.push_back({{"monomial", {{"exps", e}, {"sqrt", m.radicand}}}, {"log", to_json(f)}});
    }
    json j = {{"terms", terms}, {"str", s.str()}};
    try {
        j["value"] = s.eval(values);
    } catch (const std::exception&) {
        j["value"] = nullptr;  // unbound symbol
    }
    return j;
}

}  // namespace rtf
