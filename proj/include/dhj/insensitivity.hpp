#pragma once

// (i,j)-equivalence of words and (i,j)-insensitive sets.

#include <cstdint>

#include "dhj/point_set.hpp"

namespace dhj {

struct LetterPair {
    int i;
    int j;
};

/// Throws std::invalid_argument unless i != j and both lie in [1..k].
void check_pair(int k, LetterPair p);

/// Class representative: every j replaced by i.
Index representative(int k, int n, Index x, LetterPair p);

/// x ~ y iff every letter outside {i, j} occupies the same positions in both.
bool equivalent(const Word& x, const Word& y, LetterPair p);

/// A is a union of (i,j)-equivalence classes.
bool is_insensitive(const PointSet& a, LetterPair p);

/// Insensitivity of A inside V, tested on the pullback to the model cube.
bool is_insensitive_in(const PointSet& a, const Subspace& v, LetterPair p);

/// Smallest (i,j)-insensitive superset of A.
PointSet insensitive_closure(const PointSet& a, LetterPair p);

/// Union of equivalence classes, each kept independently with probability
/// num/den, driven by mt19937_64 seeded with `seed`.
PointSet random_insensitive_set(int k, int n, LetterPair p, std::uint64_t seed,
                                std::uint64_t num = 1, std::uint64_t den = 2);

/// Each point kept independently with probability num/den.
PointSet random_set(int k, int n, std::uint64_t seed, std::uint64_t num = 1, std::uint64_t den = 2);

} // namespace dhj
