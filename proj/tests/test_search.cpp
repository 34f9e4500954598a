#include "doctest.h"

#include "dhj/insensitivity.hpp"
#include "dhj/linefree.hpp"
#include "dhj/search.hpp"
#include "oracles.hpp"

using namespace dhj;

namespace {

PointSet words(int k, int n, std::vector<std::string> ws)
{
    std::vector<Word> out;
    for (const auto& w : ws)
        out.push_back(parse_word(k, w));
    return PointSet::from_words(k, n, out);
}

std::vector<bool> members(const PointSet& a)
{
    std::vector<bool> m(a.universe());
    for (Index x = 0; x < a.universe(); ++x)
        m[x] = a.contains(x);
    return m;
}

} // namespace

TEST_CASE("find_line examples")
{
    auto r = find_line(PointSet::full(2, 1));
    REQUIRE(r.found());
    CHECK(to_string(*r.subspace) == "a");
    CHECK(find_line(words(2, 2, {"12", "21"})).status == SearchStatus::NotFound);
    r = find_line(words(2, 2, {"11", "12", "21"}));
    REQUIRE(r.found());
    CHECK(to_string(*r.subspace) == "1a");
}

TEST_CASE("find_line agrees with the oracle")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int k = 2 + static_cast<int>(seed % 2), n = 2 + static_cast<int>(seed % 3);
        auto a = random_set(k, n, seed, 3, 4);
        auto r = find_line(a);
        CHECK(r.found() == !oracle::line_free(k, n, members(a)));
        if (r.found())
            CHECK(subspace_inside(a, *r.subspace));
    }
}

TEST_CASE("find_subspace")
{
    auto r = find_subspace(PointSet::full(2, 3), 2);
    REQUIRE(r.found());
    CHECK(r.subspace->dimension() == 2);
    CHECK(subspace_inside(PointSet::full(2, 3), *r.subspace));
    CHECK_FALSE(find_subspace(words(2, 2, {"12", "21"}), 1).found());
    CHECK(find_subspace(PointSet::full(2, 2), 2).found());
    auto almost = PointSet::full(2, 2);
    almost.erase(0);
    CHECK_FALSE(find_subspace(almost, 2).found());
}

TEST_CASE("find_restricted_subspace")
{
    auto r = find_restricted_subspace(words(3, 1, {"1", "2"}), 1);
    REQUIRE(r.found());
    CHECK(to_string(*r.subspace) == "a");
    auto a = PointSet::full(3, 2);
    a.erase(parse_word(3, "33").index());
    r = find_restricted_subspace(a, 1);
    REQUIRE(r.found());
    CHECK(restricted_inside(a, *r.subspace, 2));
    CHECK(to_string(*r.subspace) == "1a");
    CHECK_FALSE(find_restricted_subspace(PointSet(3, 2), 1).found());
}

TEST_CASE("max_linefree small values")
{
    CHECK(max_linefree(2, 2).size == 2);
    CHECK(oracle::max_linefree_exhaustive(2, 2) == 2);
    CHECK(max_linefree(2, 4).size == 6);
    CHECK(oracle::max_linefree_exhaustive(2, 4) == 6);
    CHECK(max_linefree(3, 1).size == 2);
    CHECK(oracle::max_linefree_exhaustive(3, 1) == 2);
    auto r = max_linefree(3, 2);
    CHECK(r.size == 6);
    CHECK(r.optimal);
    CHECK(oracle::max_linefree_exhaustive(3, 2) == 6);
    CHECK(oracle::line_free(3, 2, members(r.witness)));
    CHECK(oracle::line_free(3, 2, members(PointSet::full(3, 2) - words(3, 2, {"11", "22", "33"}))));
}

TEST_CASE("max_linefree under a node cap")
{
    SearchBudget b;
    b.node_cap = 3;
    auto r = max_linefree(3, 3, b);
    CHECK_FALSE(r.optimal);
    CHECK(is_line_free(r.witness));
    CHECK(r.witness.count() == r.size);
}

TEST_CASE("parallel search matches serial")
{
    SearchBudget b;
    b.jobs = 4;
    for (int n = 1; n <= 4; ++n) {
        auto s = max_linefree(2, n);
        auto p = max_linefree(2, n, b);
        CHECK(s.size == p.size);
        CHECK(s.witness == p.witness);
    }
}

TEST_CASE("dhj_value")
{
    auto r = dhj_value(2, Rational(1, 2), 6);
    REQUIRE(r.value);
    CHECK(*r.value == 3);
    CHECK(r.witnesses.at(1) == words(2, 1, {"1"}));
    CHECK(r.witnesses.at(2) == words(2, 2, {"12", "21"}));
    r = dhj_value(2, 1, 4);
    REQUIRE(r.value);
    CHECK(*r.value == 1);
    r = dhj_value(2, Rational(1, 4), 6);
    CHECK_FALSE(r.value);
    REQUIRE(r.witnesses.count(6));
    CHECK(is_line_free(r.witnesses.at(6)));
    CHECK(make_rational(r.witnesses.at(6).count(), 64) >= Rational(1, 4));
}

TEST_CASE("gr_partition_search")
{
    auto r = gr_partition_search(2, 2, {}, 1);
    REQUIRE(r.search.found());
    CHECK_FALSE(r.contained);
    Line l(parse_variable_word(2, "1a"));
    r = gr_partition_search(2, 2, {l}, 1);
    REQUIRE(r.search.found());
    CHECK(r.contained);
    CHECK(to_string(*r.search.subspace) == "1a");
}
