#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "asymp/approximants/evaluate.hpp"
#include "asymp/approximants/prediction.hpp"

namespace asymp {

using json = nlohmann::json;

namespace detail {
template <typename T>
json to_strings(const std::vector<T>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

template <typename T>
std::vector<T> from_strings(const json& a) {
    std::vector<T> v;
    for (const auto& s : a) v.push_back(from_string<T>(s.get<std::string>()));
    return v;
}

template <typename T>
T param(const json& j, const char* key) {
    return from_string<T>(j.at("params").at(key).get<std::string>());
}

template <typename T>
json envelope(const char* family, json params, const std::vector<T>& A, int N) {
    return json{{"family", family}, {"params", std::move(params)}, {"A", to_strings(A)}, {"N", N},
                {"precision", digits_of<T>()}};
}
}  // namespace detail

template <typename T>
json to_json(const PowerLawApproximant<T>& a) {
    return detail::envelope("soft-sphere", json{{"h", to_string(a.h)}}, a.A, a.N);
}

template <typename T>
json to_json(const CriticalIsothermApproximant<T>& a) {
    return detail::envelope("critical-isotherm",
                            json{{"Pc", to_string(a.Pc)}, {"rho_c", to_string(a.rho_c)},
                                 {"delta", to_string(a.delta)}, {"kTc", to_string(a.kTc)}},
                            a.A, a.N);
}

template <typename T>
json to_json(const OffsetReciprocalApproximant<T>& a) {
    bool sak = a.problem == BoundaryLayer::Sakiadis;
    return detail::envelope(sak ? "sakiadis-simple" : "blasius",
                            json{{sak ? "C" : "B", to_string(a.constant)}, {"kappa", to_string(a.kappa)}}, a.A, a.N);
}

template <typename T>
json to_json(const ExpSeriesApproximant<T>& a) {
    return detail::envelope("sakiadis-exp", json{{"C", to_string(a.C)}, {"kappa", to_string(a.kappa)}}, a.A, a.N);
}

template <typename T>
json to_json(const PadeReciprocalApproximant<T>& a) {
    return detail::envelope("flierl-petviashvili", json{{"z", to_string(a.z)}}, a.A, a.N);
}

template <typename T>
json to_json(const AnyApproximant<T>& a) {
    return std::visit([](const auto& v) { return to_json(v); }, a);
}

/// Inverse of to_json; parse under the precision the approximant was written at.
template <typename T>
AnyApproximant<T> approximant_from_json(const json& j) {
    const std::string family = j.at("family").get<std::string>();
    const int N = j.at("N").get<int>();
    auto A = detail::from_strings<T>(j.at("A"));
    using detail::param;
    if (family == "soft-sphere") return PowerLawApproximant<T>{param<T>(j, "h"), N, A};
    if (family == "critical-isotherm")
        return CriticalIsothermApproximant<T>{param<T>(j, "Pc"), param<T>(j, "rho_c"), param<T>(j, "delta"),
                                              param<T>(j, "kTc"), N, A};
    if (family == "sakiadis-simple")
        return OffsetReciprocalApproximant<T>{BoundaryLayer::Sakiadis, param<T>(j, "C"), param<T>(j, "kappa"), N, A};
    if (family == "blasius")
        return OffsetReciprocalApproximant<T>{BoundaryLayer::Blasius, param<T>(j, "B"), param<T>(j, "kappa"), N, A};
    if (family == "sakiadis-exp") return ExpSeriesApproximant<T>{param<T>(j, "C"), param<T>(j, "kappa"), N, A};
    if (family == "flierl-petviashvili") return PadeReciprocalApproximant<T>{param<T>(j, "z"), N, A};
    throw InvalidArgument("unknown approximant family: " + family);
}

template <typename T>
json to_json(const ParameterPrediction<T>& p) {
    json records = json::array();
    for (const auto& r : p.records) {
        json params;
        for (std::size_t k = 0; k < r.params.size(); ++k) params[p.param_names[k]] = to_string(r.params[k]);
        records.push_back({{"N", r.N}, {"params", params}, {"residual", to_string(r.residual)},
                           {"branch_id", r.branch_id}, {"canonical", r.canonical}});
    }
    json conv;
    for (std::size_t k = 0; k < p.converged_values.size(); ++k) conv[p.param_names[k]] = to_string(p.converged_values[k]);
    json diffs = json::array();
    for (const auto& [N, d] : p.successive_differences()) {
        json e{{"N", N}};
        for (std::size_t k = 0; k < d.size(); ++k) e[p.param_names[k]] = to_string(d[k]);
        diffs.push_back(e);
    }
    return {{"family", p.family}, {"records", records}, {"selected_branch", p.selected_branch},
            {"converged_values", conv}, {"optimal_truncation_N", p.optimal_truncation_N},
            {"successive_differences", diffs}};
}

}  // namespace asymp
