#pragma once

// Structured record of a procedure run: its rounds, the exact quantities
// measured in each, and the postconditions rechecked before returning.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dhj/rational.hpp"

namespace dhj {

struct TraceRound {
    int index = 0;
    std::string choice;
    std::vector<std::pair<std::string, Rational>> quantities;
    std::vector<std::pair<std::string, std::string>> notes;

    TraceRound& set(std::string name, Rational value);
    TraceRound& note(std::string name, std::string value);
};

struct ProcedureTrace {
    std::string procedure;
    std::string outcome;
    bool toy = false;
    std::vector<std::pair<std::string, Rational>> parameters;
    std::vector<TraceRound> rounds;
    std::vector<std::string> checks;  ///< postconditions verified exactly
    std::vector<ProcedureTrace> children;

    explicit ProcedureTrace(std::string name = {}) : procedure(std::move(name)) {}

    TraceRound& add_round(std::string choice = {});
    void param(std::string name, Rational value);
    void verified(std::string what) { checks.push_back(std::move(what)); }

    nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json rational_json(const Rational& value);

} // namespace dhj
