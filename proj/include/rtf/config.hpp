// config.hpp - JSON configuration (schema 1) and JSON views of exact values
#pragma once

#include "rtf/assembly.hpp"

#include "json.hpp"

namespace rtf {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// numbers may be JSON numbers or "a/b" strings
double number_of(const json& j);
Rational rational_of(const json& j);

AssemblyConfig parse_config(const json& j);
AssemblyConfig load_config(const std::string& path);
json config_to_json(const AssemblyConfig& cfg);

json to_json(const FormalLog& f);
json to_json(const ScaledLog& s, const std::map<std::string, double>& values = {});

}  // namespace rtf
