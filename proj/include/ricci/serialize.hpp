#pragma once

#include "ricci/curvature.hpp"
#include "ricci/theorems.hpp"
#include "ricci/transport.hpp"

#include <json.hpp>

#include <string>

namespace ricci {

/// [{from, to, mass: "p/q"}, ...] sorted by (from, to).
inline nlohmann::json plan_to_json(const TransportPlan& plan) {
    auto out = nlohmann::json::array();
    for (const auto& [key, mass] : plan.entries) {
        out.push_back({{"from", key.first}, {"to", key.second}, {"mass", to_string(mass)}});
    }
    return out;
}

inline nlohmann::json curvature_to_json(const LLYCurvature& k) {
    return {{"x", k.x}, {"y", k.y}, {"kappa", to_string(k.kappa)}};
}

inline nlohmann::json curvature_to_json(const EdgeCurvature& k) {
    return {{"x", k.x}, {"y", k.y}, {"alpha", to_string(k.alpha)}, {"kappa", to_string(k.kappa)}};
}

inline nlohmann::json idleness_to_json(const PiecewiseLinearFn& f) {
    auto out = nlohmann::json::array();
    for (const auto& b : f.breakpoints()) out.push_back({{"alpha", to_string(b.alpha)}, {"value", to_string(b.value)}});
    return out;
}

/// "alpha,value" header followed by one row per breakpoint.
inline std::string idleness_to_csv(const PiecewiseLinearFn& f) {
    std::string out = "alpha,value\n";
    for (const auto& b : f.breakpoints()) out += to_string(b.alpha) + "," + to_string(b.value) + "\n";
    return out;
}

inline nlohmann::json report_to_json(const TheoremReport& r) {
    nlohmann::json j{{"theorem", r.theorem},
                     {"hypothesis_holds", r.hypothesis_holds},
                     {"conclusion_holds", r.conclusion_holds},
                     {"violation", r.violation()}};
    if (r.witness) j["witness"] = {r.witness->u, r.witness->v};
    auto details = nlohmann::json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    j["details"] = std::move(details);
    if (r.witness_graph) j["witness_graph"] = *r.witness_graph;
    return j;
}

} // namespace ricci
