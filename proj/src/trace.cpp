#include "dhj/trace.hpp"

namespace dhj {

TraceRound& TraceRound::set(std::string name, Rational value)
{
    quantities.emplace_back(std::move(name), std::move(value));
    return *this;
}

TraceRound& TraceRound::note(std::string name, std::string value)
{
    notes.emplace_back(std::move(name), std::move(value));
    return *this;
}

TraceRound& ProcedureTrace::add_round(std::string choice)
{
    TraceRound r;
    r.index = static_cast<int>(rounds.size()) + 1;
    r.choice = std::move(choice);
    rounds.push_back(std::move(r));
    return rounds.back();
}

void ProcedureTrace::param(std::string name, Rational value)
{
    parameters.emplace_back(std::move(name), std::move(value));
}

nlohmann::ordered_json rational_json(const Rational& value)
{
    return to_string(value);
}

nlohmann::ordered_json ProcedureTrace::to_json() const
{
    nlohmann::ordered_json j;
    j["procedure"] = procedure;
    j["outcome"] = outcome;
    j["parameters_flag"] = toy ? "toy" : "paper";
    auto& params = j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [name, v] : parameters)
        params[name] = rational_json(v);
    auto& rs = j["rounds"] = nlohmann::ordered_json::array();
    for (const auto& r : rounds) {
        nlohmann::ordered_json jr;
        jr["round"] = r.index;
        if (!r.choice.empty())
            jr["choice"] = r.choice;
        for (const auto& [name, v] : r.quantities)
            jr["quantities"][name] = rational_json(v);
        for (const auto& [name, v] : r.notes)
            jr["notes"][name] = v;
        rs.push_back(std::move(jr));
    }
    j["checks"] = checks;
    if (!children.empty()) {
        auto& cs = j["children"] = nlohmann::ordered_json::array();
        for (const auto& c : children)
            cs.push_back(c.to_json());
    }
    return j;
}

} // namespace dhj
