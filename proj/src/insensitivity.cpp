#include "dhj/insensitivity.hpp"

#include <random>
#include <stdexcept>

namespace dhj {

void check_pair(int k, LetterPair p)
{
    if (p.i == p.j)
        throw std::invalid_argument("letter pair needs i != j");
    if (p.i < 1 || p.i > k || p.j < 1 || p.j > k)
        throw std::invalid_argument("letter pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                    ") outside [1.." + std::to_string(k) + "]");
}

Index representative(int k, int n, Index x, LetterPair p)
{
    Index out = 0, place = 1;
    const Index dj = static_cast<Index>(p.j - 1), di = static_cast<Index>(p.i - 1);
    const Index base = static_cast<Index>(k);
    for (int pos = 0; pos < n; ++pos) {
        Index d = x % base;
        x /= base;
        out += (d == dj ? di : d) * place;
        place *= base;
    }
    return out;
}

bool equivalent(const Word& x, const Word& y, LetterPair p)
{
    if (x.k() != y.k() || x.length() != y.length())
        throw std::invalid_argument("equivalent: words live in different cubes");
    check_pair(x.k(), p);
    for (int r = 0; r < x.length(); ++r) {
        int a = x[r] == p.j ? p.i : x[r];
        int b = y[r] == p.j ? p.i : y[r];
        if (a != b)
            return false;
    }
    return true;
}

namespace {

// A class is split when it has members both inside and outside A.
bool scan_classes(const PointSet& a, LetterPair p)
{
    check_pair(a.k(), p);
    std::vector<std::uint8_t> in(a.universe(), 0), out(a.universe(), 0);
    for (Index x = 0; x < a.universe(); ++x) {
        Index r = representative(a.k(), a.n(), x, p);
        if (a.contains(x))
            in[r] = 1;
        else
            out[r] = 1;
        if (in[r] && out[r])
            return false;
    }
    return true;
}

} // namespace

bool is_insensitive(const PointSet& a, LetterPair p)
{
    return scan_classes(a, p);
}

bool is_insensitive_in(const PointSet& a, const Subspace& v, LetterPair p)
{
    return is_insensitive(pullback(a, v), p);
}

PointSet insensitive_closure(const PointSet& a, LetterPair p)
{
    check_pair(a.k(), p);
    std::vector<std::uint8_t> hit(a.universe(), 0);
    a.for_each([&](Index x) { hit[representative(a.k(), a.n(), x, p)] = 1; });
    PointSet out(a.k(), a.n());
    for (Index x = 0; x < a.universe(); ++x)
        if (hit[representative(a.k(), a.n(), x, p)])
            out.insert(x);
    return out;
}

PointSet random_insensitive_set(int k, int n, LetterPair p, std::uint64_t seed, std::uint64_t num,
                                std::uint64_t den)
{
    check_pair(k, p);
    if (den == 0 || num > den)
        throw std::invalid_argument("random_insensitive_set: probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    PointSet out(k, n);
    std::vector<std::uint8_t> keep(out.universe(), 0);
    for (Index x = 0; x < out.universe(); ++x)
        if (representative(k, n, x, p) == x)
            keep[x] = (rng() % den) < num;
    for (Index x = 0; x < out.universe(); ++x)
        if (keep[representative(k, n, x, p)])
            out.insert(x);
    return out;
}

PointSet random_set(int k, int n, std::uint64_t seed, std::uint64_t num, std::uint64_t den)
{
    if (den == 0 || num > den)
        throw std::invalid_argument("random_set: probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    PointSet out(k, n);
    for (Index x = 0; x < out.universe(); ++x)
        if ((rng() % den) < num)
            out.insert(x);
    return out;
}

} // namespace dhj
