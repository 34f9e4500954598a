#include "doctest.h"

#include "dhj/insensitivity.hpp"
#include "oracles.hpp"

using namespace dhj;

namespace {

std::vector<bool> members(const PointSet& a)
{
    std::vector<bool> m(a.universe());
    for (Index x = 0; x < a.universe(); ++x)
        m[x] = a.contains(x);
    return m;
}

PointSet words(int k, int n, std::vector<std::string> ws)
{
    std::vector<Word> out;
    for (const auto& w : ws)
        out.push_back(parse_word(k, w));
    return PointSet::from_words(k, n, out);
}

} // namespace

TEST_CASE("equivalence of words")
{
    CHECK(equivalent(parse_word(3, "123"), parse_word(3, "321"), {1, 3}));
    CHECK_FALSE(equivalent(parse_word(3, "123"), parse_word(3, "223"), {1, 3}));
    for (Index x = 0; x < 27; ++x) {
        Word w = Word::from_index(3, 3, x);
        CHECK(equivalent(w, w, {1, 3}));
        for (Index y = 0; y < 27; ++y) {
            Word u = Word::from_index(3, 3, y);
            CHECK(equivalent(w, u, {1, 3}) == oracle::related(w.letters(), u.letters(), 1, 3));
        }
    }
}

TEST_CASE("insensitivity examples")
{
    PointSet row(3, 2);
    for (Index x = 0; x < 9; ++x)
        if (Word::from_index(3, 2, x)[0] == 2)
            row.insert(x);
    CHECK(is_insensitive(row, {1, 3}));
    CHECK_FALSE(is_insensitive(words(3, 2, {"13"}), {1, 3}));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) {
                CHECK(is_insensitive(PointSet::full(3, 2), {i, j}));
                CHECK(is_insensitive(PointSet(3, 2), {i, j}));
            }
}

TEST_CASE("substitution")
{
    CHECK(to_string(substitute(parse_word(3, "233"), 3, 1)) == "211");
    for (Index x = 0; x < 27; ++x) {
        Word w = Word::from_index(3, 3, x);
        CHECK(substitute(w, 2, 2) == w);
        CHECK(substitute(substitute(w, 3, 1), 3, 1) == substitute(w, 3, 1));
    }
}

TEST_CASE("closure")
{
    CHECK(insensitive_closure(words(3, 2, {"13"}), {1, 3}) == words(3, 2, {"11", "13", "31", "33"}));
    CHECK(insensitive_closure(PointSet(3, 2), {1, 3}).empty());
    auto d = random_insensitive_set(3, 3, {1, 3}, 4);
    CHECK(insensitive_closure(d, {1, 3}) == d);
}

TEST_CASE("insensitivity agrees with the definitional oracle")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 2 + static_cast<int>(seed % 2);
        LetterPair p{1 + static_cast<int>(seed % 2), 3};
        PointSet a = seed % 3 == 0 ? random_set(3, n, seed) : random_insensitive_set(3, n, p, seed);
        CHECK(is_insensitive(a, p) == oracle::insensitive(3, n, members(a), p.i, p.j));
        CHECK(oracle::insensitive(3, n, members(insensitive_closure(a, p)), p.i, p.j));
    }
}

TEST_CASE("closure under set operations")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 4);
        LetterPair p{2, 3};
        auto a = random_insensitive_set(3, n, p, seed);
        auto b = random_insensitive_set(3, n, p, seed + 1000);
        CHECK(is_insensitive(a & b, p));
        CHECK(is_insensitive(a | b, p));
        CHECK(is_insensitive(a.complement(), p));
    }
}

TEST_CASE("insensitivity inside a subspace")
{
    Subspace v(parse_variable_word(3, "a1b"));
    auto a = pushforward(random_insensitive_set(3, 2, {1, 3}, 3), v);
    CHECK(is_insensitive_in(a, v, {1, 3}));
}

TEST_CASE("bad letter pairs")
{
    CHECK_THROWS_AS(is_insensitive(PointSet(3, 2), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(is_insensitive(PointSet(3, 2), {1, 4}), std::invalid_argument);
}
