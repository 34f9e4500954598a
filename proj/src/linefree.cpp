#include "dhj/linefree.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace dhj {

namespace {

using Bits = std::vector<std::uint64_t>;

inline bool test(const Bits& b, Index i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void set(Bits& b, Index i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void reset(Bits& b, Index i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

Index popcount(const Bits& b)
{
    Index c = 0;
    for (auto w : b)
        c += static_cast<Index>(std::popcount(w));
    return c;
}

// Read-only description of the cube shared by all workers.
struct Geometry {
    int k = 0;
    int n = 0;
    Index size = 0;
    std::size_t words = 0;
    std::vector<std::vector<Index>> lines;
    std::vector<std::vector<int>> lines_through;
    std::vector<Index> chain;   // k = 2: symmetric chain of each point
    std::vector<Index> orbit;   // sorted-letter representative of each point
    std::vector<Index> reps;    // orbit representatives in index order

    Geometry(int k_, int n_) : k(k_), n(n_)
    {
        size = cube_size(k, n);
        words = (size + 63) / 64;
        lines_through.resize(size);
        for_each_line(k, n, [&](const Line& l) {
            lines.push_back(l.point_indices());
            for (Index p : lines.back())
                lines_through[p].push_back(static_cast<int>(lines.size() - 1));
            return true;
        });
        orbit.resize(size);
        for (Index x = 0; x < size; ++x) {
            auto letters = Word::from_index(k, n, x).letters();
            std::sort(letters.begin(), letters.end());
            orbit[x] = Word(k, letters).index();
            if (orbit[x] == x)
                reps.push_back(x);
        }
        if (k == 2) {
            // Bracket matching on the bit string (0 opens, 1 closes); the
            // unmatched positions vary along the chain, so clearing them
            // names the chain.
            chain.resize(size);
            for (Index x = 0; x < size; ++x) {
                std::vector<int> open;
                Index unmatched = 0;
                for (int b = n - 1; b >= 0; --b) {
                    bool one = (x >> b) & 1u;
                    if (!one) {
                        open.push_back(b);
                    } else if (!open.empty()) {
                        open.pop_back();
                    } else {
                        unmatched |= Index{1} << b;
                    }
                }
                chain[x] = x & ~unmatched;
            }
        }
    }
};

enum class Mode { Maximum, Decision };

struct Shared {
    const Geometry& g;
    Mode mode;
    Index target;
    BudgetMeter& meter;
    std::atomic<Index> global_best{0};
    std::atomic<std::size_t> first_success{SIZE_MAX};
};

struct BranchOutcome {
    Index best = 0;
    Bits witness;
    bool success = false;
};

class Worker {
public:
    Worker(Shared& shared, std::size_t branch)
      : sh_(shared), g_(shared.g), branch_(branch), S_(g_.words, 0), C_(g_.words, 0), count_(g_.lines.size(), 0),
        mark_(g_.size, 0)
    {
        for (Index x = 0; x < g_.size; ++x)
            if (rank_of(g_.orbit[x]) >= branch)
                set(C_, x);
    }

    BranchOutcome run()
    {
        const Index root = g_.reps[branch_];
        reset(C_, root);
        std::vector<Index> removed;
        include(root, removed);
        dfs(1);
        return out_;
    }

private:
    std::size_t rank_of(Index rep) const
    {
        return static_cast<std::size_t>(std::lower_bound(g_.reps.begin(), g_.reps.end(), rep) - g_.reps.begin());
    }

    void include(Index p, std::vector<Index>& removed)
    {
        set(S_, p);
        for (int li : g_.lines_through[p]) {
            if (++count_[li] == g_.k - 1) {
                for (Index q : g_.lines[li])
                    if (!test(S_, q) && test(C_, q)) {
                        reset(C_, q);
                        removed.push_back(q);
                    }
            }
        }
    }

    void undo_include(Index p, const std::vector<Index>& removed)
    {
        for (int li : g_.lines_through[p])
            --count_[li];
        for (Index q : removed)
            set(C_, q);
        reset(S_, p);
    }

    Index bound(Index s_size)
    {
        if (g_.k == 2) {
            ++stamp_;
            Index chains = 0;
            for (std::size_t w = 0; w < g_.words; ++w) {
                std::uint64_t word = S_[w] | C_[w];
                while (word) {
                    Index x = w * 64 + static_cast<Index>(std::countr_zero(word));
                    word &= word - 1;
                    Index c = g_.chain[x];
                    if (mark_[c] != stamp_) {
                        mark_[c] = stamp_;
                        ++chains;
                    }
                }
            }
            return chains;
        }
        Index c_size = popcount(C_);
        ++stamp_;
        Index packed = 0;
        for (std::size_t li = 0; li < g_.lines.size(); ++li) {
            bool usable = true, touches_c = false;
            for (Index q : g_.lines[li]) {
                bool in_c = test(C_, q);
                if (!in_c && !test(S_, q)) {
                    usable = false;
                    break;
                }
                if (in_c) {
                    touches_c = true;
                    if (mark_[q] == stamp_) {
                        usable = false;
                        break;
                    }
                }
            }
            if (!usable || !touches_c)
                continue;
            for (Index q : g_.lines[li])
                if (test(C_, q))
                    mark_[q] = stamp_;
            ++packed;
        }
        return s_size + c_size - packed;
    }

    bool stop_requested() const
    {
        if (sh_.meter.exhausted())
            return true;
        return sh_.mode == Mode::Decision && sh_.first_success.load(std::memory_order_relaxed) < branch_;
    }

    // Returns false to unwind the whole branch.
    bool dfs(Index s_size)
    {
        if (!sh_.meter.charge() || stop_requested())
            return false;
        if (s_size > out_.best) {
            out_.best = s_size;
            out_.witness = S_;
            if (sh_.mode == Mode::Maximum) {
                Index cur = sh_.global_best.load();
                while (cur < s_size && !sh_.global_best.compare_exchange_weak(cur, s_size)) {
                }
            } else if (s_size >= sh_.target) {
                out_.success = true;
                std::size_t cur = sh_.first_success.load();
                while (branch_ < cur && !sh_.first_success.compare_exchange_weak(cur, branch_)) {
                }
                return false;
            }
        }
        Index p = g_.size;
        for (std::size_t w = 0; w < g_.words; ++w)
            if (C_[w]) {
                p = w * 64 + static_cast<Index>(std::countr_zero(C_[w]));
                break;
            }
        if (p == g_.size)
            return true;
        Index ub = bound(s_size);
        if (sh_.mode == Mode::Maximum) {
            if (ub <= out_.best || ub < sh_.global_best.load())
                return true;
        } else if (ub < sh_.target) {
            return true;
        }

        reset(C_, p);
        std::vector<Index> removed;
        include(p, removed);
        bool go = dfs(s_size + 1);
        undo_include(p, removed);
        if (go)
            go = dfs(s_size);
        set(C_, p);
        return go;
    }

    Shared& sh_;
    const Geometry& g_;
    std::size_t branch_;
    Bits S_;
    Bits C_;
    std::vector<int> count_;
    std::vector<Index> mark_;
    Index stamp_ = 0;
    BranchOutcome out_;
};

std::vector<BranchOutcome> run_branches(Shared& shared, int jobs)
{
    const std::size_t branches = shared.g.reps.size();
    std::vector<BranchOutcome> outcomes(branches);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= branches || shared.meter.exhausted())
                return;
            if (shared.mode == Mode::Decision && shared.first_success.load() < b)
                return;
            outcomes[b] = Worker(shared, b).run();
        }
    };
    int width = std::max(1, std::min<int>(jobs, static_cast<int>(branches)));
    if (width == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < width; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    return outcomes;
}

PointSet to_set(int k, int n, const Bits& bits)
{
    PointSet s(k, n);
    for (std::size_t w = 0; w < bits.size(); ++w) {
        std::uint64_t word = bits[w];
        while (word) {
            s.insert(w * 64 + static_cast<Index>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return s;
}

} // namespace

bool is_line_free(const PointSet& a)
{
    bool clean = true;
    for_each_line(a.k(), a.n(), [&](const Line& l) {
        bool inside = true;
        for (Index p : l.point_indices())
            inside = inside && a.contains(p);
        if (inside)
            clean = false;
        return clean;
    });
    return clean;
}

LinefreeResult max_linefree(int k, int n, const SearchBudget& budget)
{
    Geometry g(k, n);
    BudgetMeter meter(budget);
    Shared shared{g, Mode::Maximum, 0, meter};
    auto outcomes = run_branches(shared, budget.jobs);

    LinefreeResult result{0, PointSet(k, n), !meter.exhausted(), meter.nodes()};
    std::size_t chosen = outcomes.size();
    for (std::size_t b = 0; b < outcomes.size(); ++b)
        if (outcomes[b].best > result.size) {
            result.size = outcomes[b].best;
            chosen = b;
        }
    if (chosen < outcomes.size())
        result.witness = to_set(k, n, outcomes[chosen].witness);
    if (result.witness.count() != result.size || !is_line_free(result.witness))
        throw std::logic_error("internal check failed: line-free witness does not verify");
    return result;
}

DecisionResult linefree_at_least(int k, int n, Index target, const SearchBudget& budget)
{
    DecisionResult result;
    if (target == 0) {
        result.status = SearchStatus::Found;
        result.witness = PointSet(k, n);
        return result;
    }
    Geometry g(k, n);
    if (target > g.size) {
        result.status = SearchStatus::NotFound;
        return result;
    }
    BudgetMeter meter(budget);
    Shared shared{g, Mode::Decision, target, meter};
    auto outcomes = run_branches(shared, budget.jobs);
    result.nodes = meter.nodes();
    for (auto& o : outcomes)
        if (o.success) {
            result.status = SearchStatus::Found;
            result.witness = to_set(k, n, o.witness);
            if (result.witness->count() < target || !is_line_free(*result.witness))
                throw std::logic_error("internal check failed: line-free witness does not verify");
            return result;
        }
    result.status = meter.exhausted() ? SearchStatus::Exhausted : SearchStatus::NotFound;
    return result;
}

HorizonResult dhj_value(int k, const Rational& delta, int horizon, const SearchBudget& budget)
{
    check_alphabet(k);
    if (delta <= 0 || delta > 1)
        throw std::invalid_argument("dhj_value: delta must satisfy 0 < delta <= 1");
    if (horizon < 1)
        throw std::invalid_argument("dhj_value: horizon must be >= 1");
    HorizonResult out;
    out.horizon = horizon;
    int last_witness = 0;
    for (int n = 1; n <= horizon; ++n) {
        Index target = to_u64(ceil(delta * Rational(to_big(cube_size(k, n)))));
        out.targets[n] = target;
        auto d = linefree_at_least(k, n, target, budget);
        if (d.status == SearchStatus::Exhausted) {
            out.exhausted = true;
            return out;
        }
        if (d.status == SearchStatus::Found) {
            out.witnesses.emplace(n, *d.witness);
            last_witness = n;
        }
    }
    if (last_witness < horizon)
        out.value = last_witness + 1;
    return out;
}

} // namespace dhj
