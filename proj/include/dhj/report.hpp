#pragma once

// Versioned JSON run report ("dhj-report v1"). Reading rejects unknown or
// missing fields.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dhj/point_set.hpp"

namespace dhj {

inline constexpr const char* report_schema = "dhj-report v1";

/// A witness in text word form. `property` names the recheck it must pass:
///   "line-free"        set, no line inside it
///   "inside"           subspace, all points in the input set
///   "restricted-inside" subspace, points over [k-1] in the input set
///   "member"           subspace, listed for information (tiles, W, ...)
///   "set"              set, no extra property
struct Witness {
    std::string label;
    std::string property;
    int k = 0;
    int n = 0;
    std::optional<std::string> generator;  ///< subspace witnesses
    std::vector<std::string> words;        ///< set witnesses

    static Witness of_set(std::string label, std::string property, const PointSet& s);
    static Witness of_subspace(std::string label, std::string property, const Subspace& v);

    std::optional<Subspace> subspace() const;
    std::optional<PointSet> set() const;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;  ///< exact text
    std::string parameters_flag = "paper";
    std::string outcome;
    std::vector<std::pair<std::string, std::string>> values;      ///< exact results
    std::vector<Witness> witnesses;
    std::vector<std::string> certificate;                         ///< rechecked facts
    nlohmann::ordered_json trace;                                 ///< null or a trace
    double wall_seconds = 0;

    void param(std::string name, std::string value) { parameters.emplace_back(std::move(name), std::move(value)); }
    void value(std::string name, std::string v) { values.emplace_back(std::move(name), std::move(v)); }

    nlohmann::ordered_json to_json() const;
    static RunReport from_json(const nlohmann::ordered_json& j);
};

/// Re-parses each witness and reruns its recheck against A (when given).
/// Returns the labels that fail.
std::vector<std::string> recheck_witnesses(const RunReport& report, const std::optional<PointSet>& a);

} // namespace dhj
