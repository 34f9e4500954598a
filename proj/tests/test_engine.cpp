#include "doctest.h"

#include "dhj/engine.hpp"
#include "dhj/linefree.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace dhj;

namespace {

PointSet words(int k, int n, std::vector<std::string> ws)
{
    std::vector<Word> out;
    for (const auto& w : ws)
        out.push_back(parse_word(k, w));
    return PointSet::from_words(k, n, out);
}

PointSet minus_diagonal()
{
    return PointSet::full(3, 2) - words(3, 2, {"11", "22", "33"});
}

ParameterOverrides toy_overrides()
{
    ParameterOverrides o;
    o.m0 = 1;
    o.theta = Rational(1, 3);
    o.eta = Rational(1, 10);
    o.gamma = Rational(1, 100);
    o.M0 = 1;
    o.gr[1] = 1;
    o.F[1] = 1;
    o.M1[1] = 1;
    o.block[1] = 1;
    o.lift[1] = 1;
    return o;
}

EngineContext toy_context()
{
    EngineContext ctx;
    ctx.overrides = toy_overrides();
    return ctx;
}

ProofParameters toy_params(const Rational& delta)
{
    return ProofParameters::build(2, delta, 1, toy_overrides());
}

TilingPlan toy_plan(const Rational& beta)
{
    TilingPlan plan;
    plan.k = 2;
    plan.beta = beta;
    plan.M1 = {{1, 1}, {2, 2}};
    plan.F = {{1, 1}};
    return plan;
}

PointSet first_column_one(int n)
{
    PointSet a(2, n);
    for (Index x = 0; x < a.universe(); ++x)
        if (Word::from_index(2, n, x)[0] == 1)
            a.insert(x);
    return a;
}

} // namespace

TEST_CASE("uniformize examples")
{
    auto r = uniformize(first_column_one(3), 1, Rational(1, 4));
    REQUIRE(r.success);
    CHECK(r.l == 2);
    CHECK(to_string(*r.V) == "1a");
    r = uniformize(PointSet::full(3, 2), 1, Rational(1, 2));
    REQUIRE(r.success);
    CHECK(r.l == 1);
    CHECK(to_string(*r.V) == "a");
    r = uniformize(words(2, 3, {"111"}), 1, Rational(1, 2));
    REQUIRE(r.success);
    CHECK(r.l == 1);
}

TEST_CASE("uniformize postcondition")
{
    Rational eps(1, 2);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto a = random_set(2, 6, seed);
        auto r = uniformize(a, 1, eps);
        REQUIRE(r.success);
        for (Index x : r.V->point_indices()) {
            Word w = Word::from_index(2, r.l, x);
            CHECK(density(slice(a, w)) >= density(a) - eps);
        }
    }
}

TEST_CASE("multidimensional lift")
{
    EngineContext ctx;
    ctx.overrides.block[2] = 2;
    auto r = multidim_lift(PointSet::full(2, 4), 2, ctx);
    REQUIRE(r.success);
    CHECK(r.V->dimension() == 2);
    CHECK(subspace_inside(PointSet::full(2, 4), *r.V));
    CHECK_FALSE(multidim_lift(words(2, 2, {"12", "21"}), 1, ctx).success);
    auto line = multidim_lift(words(2, 2, {"11", "12", "21"}), 1, ctx);
    REQUIRE(line.success);
    CHECK(to_string(*line.V) == "1a");
}

TEST_CASE("restricted lift")
{
    auto ctx = toy_context();
    auto a = PointSet::full(3, 2);
    a.erase(parse_word(3, "33").index());
    auto r = restricted_lift(a, 1, ctx);
    REQUIRE(r.success);
    CHECK(restricted_inside(a, *r.V, 2));
    r = restricted_lift(PointSet::full(3, 2), 1, ctx);
    REQUIRE(r.success);
    CHECK(r.V->dimension() == 1);
    CHECK_FALSE(restricted_lift(PointSet(3, 2), 1, ctx).success);
}

TEST_CASE("extract_uniform_lines")
{
    auto ctx = toy_context();
    auto r = extract_uniform_lines(PointSet::full(3, 3), 1, toy_params(Rational(1, 2)), ctx);
    CHECK(r.outcome == Outcome::Success);
    REQUIRE(r.U);
    CHECK(r.U->dimension() == 1);
    r = extract_uniform_lines(PointSet(3, 3), 1, toy_params(Rational(1, 2)), ctx);
    CHECK(r.outcome == Outcome::HypothesisNotMet);
    CHECK(r.stage.find("uniformize") != std::string::npos);
}

TEST_CASE("line_dichotomy")
{
    auto ctx = toy_context();
    auto r = line_dichotomy(PointSet::full(3, 3), 1, toy_params(Rational(1, 2)), ctx);
    CHECK(r.outcome == Outcome::Increment);
    REQUIRE(r.X);
    CHECK(r.density == 1);
    r = line_dichotomy(PointSet(3, 3), 1, toy_params(Rational(1, 2)), ctx);
    CHECK(r.outcome == Outcome::HypothesisNotMet);
}

TEST_CASE("structured_set short-circuits on a line")
{
    auto ctx = toy_context();
    auto r = structured_set(PointSet::full(3, 2), 1, toy_params(Rational(1, 2)), ctx);
    CHECK(r.outcome == Outcome::LineFound);
    REQUIRE(r.line);
    CHECK(subspace_inside(PointSet::full(3, 2), *r.line));
}

TEST_CASE("correlate early branch")
{
    auto ctx = toy_context();
    auto a = minus_diagonal();
    auto r = correlate(a, 1, toy_params(Rational(1, 2)), ctx);
    REQUIRE(r.outcome == Outcome::Success);
    CHECK(r.early_branch);
    REQUIRE(r.W);
    REQUIRE(r.D);
    CHECK(*r.D == PointSet::full(3, 1));
    CHECK(density_in(a, *r.W) >= Rational(1, 2) + Rational(1, 200));
    CHECK(correlate(PointSet::full(3, 2), 1, toy_params(Rational(1, 2)), ctx).outcome == Outcome::LineFound);
}

TEST_CASE("tiling examples")
{
    EngineContext ctx;
    auto t = TilingParameters::make(2, Rational(1, 8), 1, 1);
    auto r = tile_insensitive(PointSet(3, 3), 1, t, ctx);
    REQUIRE(r.success);
    CHECK(r.family.empty());
    CHECK(r.residual == 0);

    PointSet d(3, 3);
    for (Index x = 0; x < 27; ++x) {
        Word w = Word::from_index(3, 3, x);
        if (w[0] == 2 && w[1] != 2 && w[2] != 2)
            d.insert(x);
    }
    CHECK(density(d) == Rational(4, 27));
    r = tile_insensitive(d, 1, t, ctx);
    REQUIRE(r.success);
    CHECK(r.family.empty());
    CHECK(r.rounds == 0);

    t = TilingParameters::make(2, Rational(1, 4), 1, 1);
    auto full = PointSet::full(3, 4);
    r = tile_insensitive(full, 1, t, ctx);
    REQUIRE(r.success);
    CHECK_FALSE(r.family.empty());
    CHECK(family_is_valid(r.family, full, 1));
    CHECK(r.residual < Rational(1, 2));
    CHECK(r.residual == density(full - family_union(r.family, 3, 4)));
}

TEST_CASE("tiling rejects sensitive input")
{
    EngineContext ctx;
    auto t = TilingParameters::make(2, Rational(1, 4), 1, 1);
    CHECK_THROWS_AS(tile_insensitive(words(3, 2, {"13"}), 1, t, ctx), std::invalid_argument);
}

TEST_CASE("family validity detects overlap and escape")
{
    Subspace a(parse_variable_word(3, "1a")), b(parse_variable_word(3, "a1"));
    auto full = PointSet::full(3, 2);
    CHECK(family_is_valid({a}, full, 1));
    CHECK_FALSE(family_is_valid({a, b}, full, 1));
    CHECK_FALSE(family_is_valid({a}, words(3, 2, {"11", "12"}), 1));
    CHECK_FALSE(family_is_valid({a}, full, 2));
}

TEST_CASE("tile_intersection with one part equals tile_insensitive")
{
    EngineContext ctx;
    auto plan = toy_plan(Rational(1, 8));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto d = random_insensitive_set(3, 4, {1, 3}, seed, 3, 4);
        auto one = tile_insensitive(d, 1, plan.at(1), ctx);
        auto many = tile_intersection({d}, 1, 1, plan, ctx);
        CHECK(one.success == many.success);
        CHECK(one.family == many.family);
        CHECK(one.residual == many.residual);
    }
    auto full = PointSet::full(3, 4);
    auto r = tile_intersection({full}, 1, 1, plan, ctx);
    CHECK(r.success);
}

TEST_CASE("dichotomy_step")
{
    auto ctx = toy_context();
    auto p = toy_params(Rational(2, 3));
    auto plan = toy_plan(p.beta());
    auto r = dichotomy_step(PointSet::full(3, 2), 1, p, plan, ctx);
    CHECK(r.outcome == Outcome::LineFound);
    r = dichotomy_step(minus_diagonal(), 1, p, plan, ctx);
    CHECK(r.outcome == Outcome::HypothesisNotMet);
    CHECK_FALSE(r.stage.empty());
}

TEST_CASE("driver positive control")
{
    auto ctx = toy_context();
    auto a = PointSet::full(3, 2);
    auto r = dhj_driver(
        a, Rational(9, 10), 1, 5, [](const Rational& d) { return toy_params(d); },
        [](const ProofParameters& p) { return toy_plan(p.beta()); }, ctx);
    CHECK(r.outcome == Outcome::LineFound);
    CHECK(r.rounds == 1);
    REQUIRE(r.line);
    CHECK(subspace_inside(a, *r.line));
}

TEST_CASE("parameters")
{
    auto p = ProofParameters::build(2, 1, 9);
    CHECK(p.theta == Rational(1, 76684));
    CHECK(p.theta * (oracle::zpow(3, 9) - oracle::zpow(2, 9)) == Rational(1, 4));
    CHECK(p.margins_hold());
    CHECK_FALSE(p.toy);
    CHECK(toy_params(Rational(1, 2)).toy);
    CHECK_THROWS_AS(ProofParameters::build(2, 2, 9), std::invalid_argument);
    std::istringstream in("theta = 1/3\ngr 1 = 2\n# comment\n");
    auto o = parse_overrides(in);
    CHECK(*o.theta == Rational(1, 3));
    CHECK(o.gr.at(1) == 2);
    std::istringstream bad("zeta = 1\n");
    CHECK_THROWS_AS(parse_overrides(bad), std::invalid_argument);
}
