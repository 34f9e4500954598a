#include "doctest.h"

#include "dhj/insensitivity.hpp"
#include "dhj/point_set.hpp"
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

std::vector<bool> members(const PointSet& a)
{
    std::vector<bool> m(a.universe());
    for (Index x = 0; x < a.universe(); ++x)
        m[x] = a.contains(x);
    return m;
}

} // namespace

TEST_CASE("density")
{
    CHECK(density(PointSet(2, 2)) == 0);
    CHECK(density(words(2, 2, {"11", "12"})) == Rational(1, 2));
    CHECK(density(PointSet::full(3, 2)) == 1);
}

TEST_CASE("density inside a subspace")
{
    auto a = PointSet::full(3, 2) - words(3, 2, {"11", "22", "33"});
    CHECK(density_in(a, Subspace(parse_variable_word(3, "a1"))) == Rational(2, 3));
    CHECK(density_in(a, Subspace(parse_variable_word(3, "1a"))) == Rational(2, 3));
    CHECK(density_in(a, Subspace(parse_variable_word(3, "aa"))) == 0);
    CHECK(density_in(PointSet::full(3, 2), Subspace(parse_variable_word(3, "aa"))) == 1);
}

TEST_CASE("slices")
{
    auto a = words(2, 2, {"11", "12", "21"});
    auto s1 = slice(a, parse_word(2, "1"));
    auto s2 = slice(a, parse_word(2, "2"));
    CHECK(s1 == PointSet::full(2, 1));
    CHECK(density(s1) == 1);
    CHECK(s2 == words(2, 1, {"1"}));
    CHECK(density(s2) == Rational(1, 2));
    CHECK((density(s1) + density(s2)) / 2 == Rational(3, 4));
}

TEST_CASE("slice averaging identity on random sets")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int k = 2 + static_cast<int>(seed % 2);
        int n = 3 + static_cast<int>(seed % 3);
        auto a = random_set(k, n, seed);
        auto m = members(a);
        for (int l = 1; l < n; ++l) {
            Rational sum = 0;
            for (Index x = 0; x < oracle::ipow(k, l); ++x)
                sum += density(slice(a, l, x));
            sum /= Rational(to_big(oracle::ipow(k, l)));
            CHECK(sum == density(a));
            CHECK(oracle::mean_slice_density(k, n, l, m) == density(a));
        }
    }
}

TEST_CASE("pullback and pushforward")
{
    auto a = words(3, 3, {"112", "212", "312", "111"});
    Subspace v(parse_variable_word(3, "a12"));
    auto model = pullback(a, v);
    CHECK(model == PointSet::full(3, 1));
    CHECK(pushforward(model, v) == words(3, 3, {"112", "212", "312"}));
    CHECK(restrict(v, 2) == words(3, 3, {"112", "212"}));
}

TEST_CASE("set algebra")
{
    auto a = words(2, 2, {"11", "12"});
    auto b = words(2, 2, {"12", "22"});
    CHECK((a | b).count() == 3);
    CHECK((a & b) == words(2, 2, {"12"}));
    CHECK((a - b) == words(2, 2, {"11"}));
    CHECK(a.complement() == words(2, 2, {"21", "22"}));
    CHECK((a & b).subset_of(a));
    CHECK_THROWS_AS(a | PointSet(2, 3), std::invalid_argument);
}

TEST_CASE("wordset round trip")
{
    auto a = random_set(3, 3, 7);
    std::stringstream ss;
    write_wordset(ss, a);
    CHECK(read_wordset(ss) == a);
    auto e = load_wordset(std::string(FIXTURE_DIR) + "/empty_k2_n3.ws");
    CHECK(e.k() == 2);
    CHECK(e.n() == 3);
    CHECK(e.empty());
    std::istringstream bad("# wordset v1\nk=2 n=2\n13\n");
    CHECK_THROWS_AS(read_wordset(bad), std::invalid_argument);
}
