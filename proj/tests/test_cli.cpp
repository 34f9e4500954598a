#include "doctest.h"

#include "dhj/cli.hpp"
#include "dhj/report.hpp"

#include "json.hpp"
#include <sstream>

using namespace dhj;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name)
{
    return std::string(FIXTURE_DIR) + "/" + name;
}

nlohmann::ordered_json json_of(const Run& r)
{
    return nlohmann::ordered_json::parse(r.out);
}

std::string value(const nlohmann::ordered_json& j, const std::string& name)
{
    const auto& v = j.at("values");
    return v.contains(name) ? v.at(name).get<std::string>() : std::string{};
}

} // namespace

TEST_CASE("lines")
{
    auto r = run({"lines", "-k", "3", "-n", "9", "--json"});
    REQUIRE(r.code == cli::exit_ok);
    CHECK(value(json_of(r), "count") == "242461");
}

TEST_CASE("find-line exit codes")
{
    auto r = run({"find-line", "-A", fixture("empty_k2_n3.ws")});
    CHECK(r.code == cli::exit_negative);
    r = run({"find-line", "-A", fixture("full_k3_n2.ws"), "--json"});
    CHECK(r.code == cli::exit_ok);
    auto j = json_of(r);
    CHECK(j.at("outcome") == "found");
    CHECK(run({"find-line", "-A", fixture("minus_diagonal_k3_n2.ws")}).code == cli::exit_negative);
}

TEST_CASE("usage errors")
{
    CHECK(run({"verify", "unknown"}).code == cli::exit_usage);
    CHECK(run({"find-line", "-A", fixture("missing.ws")}).code == cli::exit_usage);
    CHECK(run({"nonsense"}).code == cli::exit_usage);
    CHECK(run({}).code == cli::exit_usage);
    CHECK(run({"lines", "-k", "1", "-n", "2"}).code == cli::exit_usage);
}

TEST_CASE("dhj value")
{
    auto r = run({"dhj", "-k", "2", "--delta", "1/2", "--horizon", "6", "--json"});
    REQUIRE(r.code == cli::exit_ok);
    CHECK(value(json_of(r), "N") == "3");
    r = run({"dhj", "-k", "2", "--delta", "1/4", "--horizon", "6"});
    CHECK(r.code == cli::exit_negative);
}

TEST_CASE("density")
{
    auto r = run({"density", "-A", fixture("minus_diagonal_k3_n2.ws"), "--subspace", "a1", "--json"});
    REQUIRE(r.code == cli::exit_ok);
    CHECK(value(json_of(r), "density in subspace") == "2/3");
}

TEST_CASE("max-linefree")
{
    auto r = run({"max-linefree", "-k", "3", "-n", "2", "--json"});
    REQUIRE(r.code == cli::exit_ok);
    auto j = json_of(r);
    CHECK(value(j, "size") == "6");
    auto report = RunReport::from_json(j);
    CHECK(recheck_witnesses(report, std::nullopt).empty());
}

TEST_CASE("bounds")
{
    auto r = run({"bounds", "-k", "2", "--delta", "1", "--json"});
    CHECK(r.code == cli::exit_negative);
    CHECK(json_of(r).at("outcome") == "undetermined");
}

TEST_CASE("dichotomy negative control")
{
    auto r = run({"dichotomy", "-A", fixture("minus_diagonal_k3_n2.ws"), "--d", "1", "--delta", "2/3", "--toy-params",
                  fixture("toy.params"), "--json"});
    CHECK(r.code == cli::exit_negative);
    auto j = json_of(r);
    CHECK(j.at("outcome") == "hypothesis-not-met");
    CHECK(j.at("parameters_flag") == "toy");
}

TEST_CASE("drive on a full cube")
{
    auto r = run({"drive", "-A", fixture("full_k3_n2.ws"), "--d", "1", "--delta", "9/10", "--toy-params",
                  fixture("toy.params"), "--json"});
    REQUIRE(r.code == cli::exit_ok);
    auto report = RunReport::from_json(json_of(r));
    CHECK(report.outcome == "line-found");
}

TEST_CASE("verify suites")
{
    auto r = run({"verify", "lines"});
    CHECK(r.code == cli::exit_ok);
}

TEST_CASE("report round trip")
{
    auto r = run({"find-line", "-A", fixture("full_k3_n2.ws"), "--json"});
    REQUIRE(r.code == cli::exit_ok);
    auto j = json_of(r);
    auto report = RunReport::from_json(j);
    CHECK(report.to_json() == j);
    auto extra = j;
    extra["surprise"] = 1;
    CHECK_THROWS(RunReport::from_json(extra));
    auto wrong = j;
    wrong["schema"] = "other";
    CHECK_THROWS(RunReport::from_json(wrong));
    auto missing = j;
    missing.erase("outcome");
    CHECK_THROWS(RunReport::from_json(missing));
}
