#pragma once

// Largest line-free subsets of [k]^n by branch and bound, and horizon-verified
// values of dhj(k, delta).

#include <map>
#include <optional>

#include "dhj/point_set.hpp"
#include "dhj/search.hpp"

namespace dhj {

struct LinefreeResult {
    Index size = 0;
    PointSet witness;
    bool optimal = false;  ///< false when the budget ran out first
    std::uint64_t nodes = 0;
};

/// Maximum line-free set. With jobs > 1 the root branches run concurrently;
/// the witness is the same as the single-worker run.
LinefreeResult max_linefree(int k, int n, const SearchBudget& budget = {});

struct DecisionResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<PointSet> witness;
    std::uint64_t nodes = 0;
};

/// Is there a line-free set with at least `target` points?
DecisionResult linefree_at_least(int k, int n, Index target, const SearchBudget& budget = {});

/// Least N <= horizon such that every n in [N, horizon] forces a line in
/// sets of density >= delta. Certified only up to the horizon.
struct HorizonResult {
    std::optional<int> value;  ///< empty: undetermined
    int horizon = 0;
    bool exhausted = false;    ///< some level ran out of budget
    std::map<int, PointSet> witnesses;  ///< line-free sets of density >= delta
    std::map<int, Index> targets;       ///< ceil(delta k^n) per level
};

HorizonResult dhj_value(int k, const Rational& delta, int horizon, const SearchBudget& budget = {});

/// True when A contains no line; independent exhaustive check.
bool is_line_free(const PointSet& a);

} // namespace dhj
