#include "dhj/report.hpp"

#include <set>
#include <stdexcept>

#include "dhj/linefree.hpp"
#include "dhj/search.hpp"

namespace dhj {

using nlohmann::ordered_json;

Witness Witness::of_set(std::string label, std::string property, const PointSet& s)
{
    Witness w;
    w.label = std::move(label);
    w.property = std::move(property);
    w.k = s.k();
    w.n = s.n();
    s.for_each([&](Index i) { w.words.push_back(to_string(Word::from_index(s.k(), s.n(), i))); });
    return w;
}

Witness Witness::of_subspace(std::string label, std::string property, const Subspace& v)
{
    Witness w;
    w.label = std::move(label);
    w.property = std::move(property);
    w.k = v.k();
    w.n = v.length();
    w.generator = to_string(v.generator());
    return w;
}

std::optional<Subspace> Witness::subspace() const
{
    if (!generator)
        return std::nullopt;
    return Subspace(parse_variable_word(k, *generator));
}

std::optional<PointSet> Witness::set() const
{
    if (generator)
        return std::nullopt;
    std::vector<Word> ws;
    for (const auto& t : words)
        ws.push_back(parse_word(k, t));
    return PointSet::from_words(k, n, ws);
}

namespace {

ordered_json pairs_json(const std::vector<std::pair<std::string, std::string>>& v)
{
    ordered_json j = ordered_json::object();
    for (const auto& [name, value] : v)
        j[name] = value;
    return j;
}

std::vector<std::pair<std::string, std::string>> pairs_from(const ordered_json& j, const char* what)
{
    if (!j.is_object())
        throw std::invalid_argument(std::string("report: '") + what + "' must be an object");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [name, value] : j.items()) {
        if (!value.is_string())
            throw std::invalid_argument(std::string("report: values in '") + what + "' must be strings");
        out.emplace_back(name, value.get<std::string>());
    }
    return out;
}

void expect_keys(const ordered_json& j, const std::set<std::string>& required, const std::set<std::string>& optional,
                 const char* what)
{
    if (!j.is_object())
        throw std::invalid_argument(std::string("report: ") + what + " must be an object");
    for (const auto& [name, value] : j.items())
        if (!required.count(name) && !optional.count(name))
            throw std::invalid_argument(std::string("report: unknown field '") + name + "' in " + what);
    for (const auto& name : required)
        if (!j.contains(name))
            throw std::invalid_argument(std::string("report: missing field '") + name + "' in " + what);
}

} // namespace

ordered_json RunReport::to_json() const
{
    ordered_json j;
    j["schema"] = report_schema;
    j["command"] = command;
    j["parameters"] = pairs_json(parameters);
    j["parameters_flag"] = parameters_flag;
    j["outcome"] = outcome;
    j["values"] = pairs_json(values);
    j["witnesses"] = ordered_json::array();
    for (const auto& w : witnesses) {
        ordered_json wj;
        wj["label"] = w.label;
        wj["property"] = w.property;
        wj["k"] = w.k;
        wj["n"] = w.n;
        if (w.generator)
            wj["generator"] = *w.generator;
        else
            wj["words"] = w.words;
        j["witnesses"].push_back(wj);
    }
    j["certificate"] = certificate;
    j["trace"] = trace;
    j["wall_seconds"] = wall_seconds;
    return j;
}

RunReport RunReport::from_json(const ordered_json& j)
{
    expect_keys(j,
                {"schema", "command", "parameters", "parameters_flag", "outcome", "values", "witnesses", "certificate",
                 "trace", "wall_seconds"},
                {}, "report");
    if (j.at("schema") != report_schema)
        throw std::invalid_argument("report: unsupported schema " + j.at("schema").dump());
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.parameters = pairs_from(j.at("parameters"), "parameters");
    r.parameters_flag = j.at("parameters_flag").get<std::string>();
    if (r.parameters_flag != "paper" && r.parameters_flag != "toy")
        throw std::invalid_argument("report: parameters_flag must be 'paper' or 'toy'");
    r.outcome = j.at("outcome").get<std::string>();
    r.values = pairs_from(j.at("values"), "values");
    for (const auto& wj : j.at("witnesses")) {
        expect_keys(wj, {"label", "property", "k", "n"}, {"generator", "words"}, "witness");
        Witness w;
        w.label = wj.at("label").get<std::string>();
        w.property = wj.at("property").get<std::string>();
        w.k = wj.at("k").get<int>();
        w.n = wj.at("n").get<int>();
        if (wj.contains("generator") == wj.contains("words"))
            throw std::invalid_argument("report: witness needs exactly one of 'generator' and 'words'");
        if (wj.contains("generator"))
            w.generator = wj.at("generator").get<std::string>();
        else
            w.words = wj.at("words").get<std::vector<std::string>>();
        r.witnesses.push_back(std::move(w));
    }
    r.certificate = j.at("certificate").get<std::vector<std::string>>();
    r.trace = j.at("trace");
    r.wall_seconds = j.at("wall_seconds").get<double>();
    return r;
}

std::vector<std::string> recheck_witnesses(const RunReport& report, const std::optional<PointSet>& a)
{
    std::vector<std::string> bad;
    for (const auto& w : report.witnesses) {
        bool ok = true;
        try {
            if (w.property == "line-free") {
                auto s = w.set();
                ok = s && is_line_free(*s);
            } else if (w.property == "inside") {
                auto v = w.subspace();
                ok = v && (!a || subspace_inside(*a, *v));
            } else if (w.property == "restricted-inside") {
                auto v = w.subspace();
                ok = v && (!a || restricted_inside(*a, *v, w.k - 1));
            } else if (w.property == "member") {
                ok = w.subspace().has_value();
            } else if (w.property == "set") {
                ok = w.set().has_value();
            } else {
                ok = false;
            }
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok)
            bad.push_back(w.label);
    }
    return bad;
}

} // namespace dhj
