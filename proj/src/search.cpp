#include "dhj/search.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace dhj {

void SearchBudget::validate() const
{
    if (node_cap == 0)
        throw std::invalid_argument("search budget: node cap must be positive");
    if (!(wall_seconds > 0))
        throw std::invalid_argument("search budget: wall-time cap must be positive");
    if (jobs < 1)
        throw std::invalid_argument("search budget: jobs must be >= 1");
}

std::string to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found:
        return "found";
    case SearchStatus::NotFound:
        return "not-found";
    case SearchStatus::Exhausted:
        return "exhausted";
    }
    return "unknown";
}

BudgetMeter::BudgetMeter(const SearchBudget& budget)
  : budget_(budget), start_(std::chrono::steady_clock::now())
{
    budget_.validate();
}

double BudgetMeter::elapsed_seconds() const
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

bool BudgetMeter::charge()
{
    if (exhausted_.load(std::memory_order_relaxed))
        return false;
    std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_.node_cap) {
        exhausted_.store(true, std::memory_order_relaxed);
        return false;
    }
    if (std::isfinite(budget_.wall_seconds) && (n & 1023) == 0 && elapsed_seconds() > budget_.wall_seconds) {
        exhausted_.store(true, std::memory_order_relaxed);
        return false;
    }
    return true;
}

bool subspace_inside(const PointSet& a, const Subspace& v)
{
    return restricted_inside(a, v, v.k());
}

bool restricted_inside(const PointSet& a, const Subspace& v, int letters)
{
    if (a.k() != v.k() || a.n() != v.length())
        throw std::invalid_argument("subspace does not live in the cube of the set");
    for (Index i : v.point_indices(letters))
        if (!a.contains(i))
            return false;
    return true;
}

namespace {

SearchResult scan(const PointSet& a, int m, int letters, const SearchBudget& budget)
{
    if (m < 1 || m > a.n())
        throw std::invalid_argument("subspace dimension must satisfy 1 <= m <= n");
    BudgetMeter meter(budget);
    SearchResult out;
    if (a.count() < checked_power(letters, m)) {
        out.status = SearchStatus::NotFound;
        return out;
    }
    for_each_subspace(a.k(), a.n(), m, [&](const Subspace& v) {
        if (!meter.charge())
            return false;
        bool inside = v.for_each_point(letters, [&](Index i) { return a.contains(i); });
        if (inside) {
            out.subspace = v;
            return false;
        }
        return true;
    });
    out.nodes = meter.nodes();
    if (out.subspace) {
        if (!restricted_inside(a, *out.subspace, letters))
            throw std::logic_error("internal check failed: found subspace not inside the set");
        out.status = SearchStatus::Found;
    } else {
        out.status = meter.exhausted() ? SearchStatus::Exhausted : SearchStatus::NotFound;
    }
    return out;
}

struct LineKey {
    Index base;
    Index weight;
    bool operator==(const LineKey&) const = default;
};

struct LineKeyHash {
    std::size_t operator()(const LineKey& key) const
    {
        return std::hash<Index>()(key.base * 0x9E3779B97F4A7C15ull ^ key.weight);
    }
};

} // namespace

SearchResult find_line(const PointSet& a, const SearchBudget& budget)
{
    return scan(a, 1, a.k(), budget);
}

SearchResult find_subspace(const PointSet& a, int m, const SearchBudget& budget)
{
    return scan(a, m, a.k(), budget);
}

SearchResult find_restricted_subspace(const PointSet& a, int m, const SearchBudget& budget)
{
    if (a.k() < 3)
        throw std::invalid_argument("find_restricted_subspace needs alphabet k+1 >= 3");
    return scan(a, m, a.k() - 1, budget);
}

GrResult gr_partition_search(int k, int n, const std::vector<Line>& lines, int m, GrPreference preference,
                             const SearchBudget& budget)
{
    check_alphabet(k);
    if (m < 1 || m > n)
        throw std::invalid_argument("gr_partition_search: need 1 <= m <= n");
    std::unordered_set<LineKey, LineKeyHash> in_l;
    for (const Line& l : lines) {
        if (l.k() != k || l.length() != n || !l.is_line())
            throw std::invalid_argument("gr_partition_search: " + to_string(l) + " is not a line of the cube");
        in_l.insert({l.base(), l.weight(0)});
    }
    BudgetMeter meter(budget);
    GrResult out;
    for_each_subspace(k, n, m, [&](const Subspace& v) {
        if (!meter.charge())
            return false;
        bool all_in = true, all_out = true;
        for (const Line& l : lines_within(v)) {
            bool in = in_l.count({l.base(), l.weight(0)}) > 0;
            all_in = all_in && in;
            all_out = all_out && !in;
            if (!all_in && !all_out)
                return true;
        }
        if (all_in || (all_out && preference == GrPreference::Either)) {
            out.search.subspace = v;
            out.contained = all_in;
            return false;
        }
        return true;
    });
    out.search.nodes = meter.nodes();
    if (out.search.subspace) {
        for (const Line& l : lines_within(*out.search.subspace)) {
            bool in = false;
            for (const Line& m_line : lines)
                in = in || m_line == l;
            if (in != out.contained)
                throw std::logic_error("internal check failed: partition subspace is not monochromatic");
        }
        out.search.status = SearchStatus::Found;
    } else {
        out.search.status = meter.exhausted() ? SearchStatus::Exhausted : SearchStatus::NotFound;
    }
    return out;
}

} // namespace dhj
