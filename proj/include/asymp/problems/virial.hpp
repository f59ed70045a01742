#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "asymp/numeric/errors.hpp"
#include "asymp/numeric/scalar.hpp"

namespace asymp {

/// Virial data. coeffs holds B_1, B_2, ... with B_1 = 1 (reduced B-bar for
/// the soft-sphere form).
template <typename T>
struct VirialInput {
    std::string name;
    std::vector<T> coeffs;
    std::optional<T> h, kTc, Pc, rho_c, delta;
};

namespace detail {
template <typename T>
T json_scalar(const nlohmann::json& j, const std::string& key) {
    if (j.is_string()) return from_string<T>(j.get<std::string>());
    if (j.is_number()) return from_string<T>(j.dump());
    throw InvalidArgument("virial input: '" + key + "' must be a number or decimal string");
}

template <typename T>
std::optional<T> json_optional(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return json_scalar<T>(j.at(key), key);
}
}  // namespace detail

template <typename T>
VirialInput<T> parse_virial(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidArgument("virial input: expected a JSON object");
    VirialInput<T> v;
    if (j.contains("name") && j.at("name").is_string()) v.name = j.at("name").get<std::string>();
    if (!j.contains("coeffs") || !j.at("coeffs").is_array())
        throw MissingCoefficients("virial input: 'coeffs' array required");
    for (const auto& c : j.at("coeffs")) v.coeffs.push_back(detail::json_scalar<T>(c, "coeffs"));
    v.h = detail::json_optional<T>(j, "h");
    v.kTc = detail::json_optional<T>(j, "kTc");
    v.Pc = detail::json_optional<T>(j, "Pc");
    v.rho_c = detail::json_optional<T>(j, "rho_c");
    v.delta = detail::json_optional<T>(j, "delta");
    return v;
}

template <typename T>
VirialInput<T> load_virial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
    return parse_virial<T>(j);
}

template <typename T>
nlohmann::json virial_to_json(const VirialInput<T>& v) {
    nlohmann::json j;
    j["name"] = v.name;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& c : v.coeffs) j["coeffs"].push_back(to_string(c));
    auto put = [&](const char* key, const std::optional<T>& x) {
        j[key] = x ? nlohmann::json(to_string(*x)) : nlohmann::json(nullptr);
    };
    put("h", v.h);
    put("kTc", v.kTc);
    put("Pc", v.Pc);
    put("rho_c", v.rho_c);
    put("delta", v.delta);
    return j;
}

}  // namespace asymp
