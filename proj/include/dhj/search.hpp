#pragma once

// Exhaustive finders for lines and subspaces inside a point set, and the
// per-instance Graham-Rothschild partition search.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dhj/point_set.hpp"

namespace dhj {

struct SearchBudget {
    std::uint64_t node_cap = std::numeric_limits<std::uint64_t>::max();
    double wall_seconds = std::numeric_limits<double>::infinity();
    int jobs = 1;

    void validate() const;
};

enum class SearchStatus { Found, NotFound, Exhausted };

std::string to_string(SearchStatus s);

/// Shared node and clock accounting for one search. Thread-safe.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& budget);

    /// Charges one node; false once a cap is exceeded (and from then on).
    bool charge();
    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
    double elapsed_seconds() const;

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
};

struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Subspace> subspace;
    std::uint64_t nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
};

/// Lexicographically first line of the ambient cube inside A.
SearchResult find_line(const PointSet& a, const SearchBudget& budget = {});

/// Lexicographically first m-dimensional subspace inside A.
SearchResult find_subspace(const PointSet& a, int m, const SearchBudget& budget = {});

/// Lexicographically first m-dimensional V of [k+1]^n with V restricted to
/// [k] inside A. A must have alphabet k+1 >= 3.
SearchResult find_restricted_subspace(const PointSet& a, int m, const SearchBudget& budget = {});

enum class GrPreference {
    Either,    ///< first V in lexicographic order satisfying either branch
    Contained  ///< first V with Lines(V) inside L; disjoint V are skipped
};

struct GrResult {
    SearchResult search;
    bool contained = false;  ///< Lines(V) ⊆ L (true) or Lines(V) ∩ L = ∅ (false)
};

/// Searches m-dimensional V of [k]^n with Lines(V) ⊆ L or Lines(V) ∩ L = ∅.
GrResult gr_partition_search(int k, int n, const std::vector<Line>& lines, int m,
                             GrPreference preference = GrPreference::Either,
                             const SearchBudget& budget = {});

/// Independent point-by-point recheck used on every Found answer.
bool subspace_inside(const PointSet& a, const Subspace& v);
bool restricted_inside(const PointSet& a, const Subspace& v, int letters);

} // namespace dhj
