#include "dhj/engine.hpp"

#include <map>
#include <stdexcept>

namespace dhj {

namespace {

LiftResult fail(LiftResult out, std::string reason)
{
    out.reason = reason;
    out.trace.outcome = "exhausted: " + reason;
    return out;
}

} // namespace

LiftResult multidim_lift(const PointSet& a, int m, const EngineContext& ctx)
{
    if (m < 1)
        throw std::invalid_argument("multidim_lift: m must be >= 1");
    LiftResult out;
    out.trace.procedure = "multidim_lift";
    const int k = a.k(), n = a.n();
    if (m == 1) {
        auto found = ctx.line_oracle(a);
        if (!found.found())
            return fail(std::move(out), "no line (" + to_string(found.status) + ")");
        require(subspace_inside(a, *found.subspace), "lifted line lies inside A");
        out.success = true;
        out.V = found.subspace;
        out.trace.add_round(to_string(*out.V));
        out.trace.outcome = "success";
        return out;
    }
    if (a.empty())
        return fail(std::move(out), "empty set");
    const Rational delta = density(a);
    auto block = ctx.lift_block(k, m, delta);
    if (!block) {
        Rational half = delta / 2;
        half.canonicalize();
        return fail(std::move(out), "missing oracle value dhj(" + std::to_string(k) + ", " + to_string(half) + ")");
    }
    const int M = *block;
    if (M < 1 || M >= n)
        return fail(std::move(out), "block length " + std::to_string(M) + " needs n > " + std::to_string(M));
    const int p = n - M;
    out.trace.param("delta", delta);
    out.trace.param("M", M);

    // Each dense slice votes for its first line.
    struct Ballot {
        Line line;
        Index votes;
    };
    std::map<std::vector<int>, Ballot> ballots;
    std::vector<PointSet> fibers;
    std::vector<Index> dense;
    const Index prefixes = cube_size(k, p);
    for (Index x = 0; x < prefixes; ++x) {
        PointSet fiber = slice(a, p, x);
        if (density(fiber) * 2 < delta)
            continue;
        dense.push_back(x);
        auto found = ctx.line_oracle(fiber);
        if (found.found()) {
            auto [it, fresh] = ballots.try_emplace(found.subspace->generator().symbols(), Ballot{*found.subspace, 0});
            ++it->second.votes;
        }
        fibers.push_back(std::move(fiber));
    }
    const Ballot* winner = nullptr;
    for (const auto& [key, b] : ballots)
        if (!winner || b.votes > winner->votes
            || (b.votes == winner->votes && lex_less(b.line.generator(), winner->line.generator())))
            winner = &b;
    if (!winner)
        return fail(std::move(out), "no dense slice contains a line");

    PointSet voters(k, p);
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (subspace_inside(fibers[i], winner->line))
            voters.insert(dense[i]);
    auto& round = out.trace.add_round(to_string(winner->line));
    round.set("dense slices", Rational(to_big(dense.size())) / Rational(to_big(prefixes)));
    round.set("slices containing the line", density(voters));

    auto inner = multidim_lift(voters, m - 1, ctx);
    out.trace.children.push_back(inner.trace);
    if (!inner.success)
        return fail(std::move(out), "inner lift at dimension " + std::to_string(m - 1) + ": " + inner.reason);
    Subspace v = concat(*inner.V, winner->line);
    require(subspace_inside(a, v), "lifted subspace lies inside A");
    out.trace.verified("V inside A");
    out.success = true;
    out.V = v;
    out.trace.outcome = "success";
    return out;
}

LiftResult restricted_lift(const PointSet& a, int m, const EngineContext& ctx)
{
    if (m < 1)
        throw std::invalid_argument("restricted_lift: m must be >= 1");
    const int K = a.k(), n = a.n(), k = K - 1;
    if (K < 3)
        throw std::invalid_argument("restricted_lift: alphabet must be >= 3");
    LiftResult out;
    out.trace.procedure = "restricted_lift";
    if (a.count() == a.universe()) {
        // Every subspace qualifies; take the first.
        for_each_subspace(K, n, m, [&](const Subspace& v) {
            out.V = v;
            return false;
        });
        if (!out.V)
            return fail(std::move(out), "no " + std::to_string(m) + "-dimensional subspace in [" + std::to_string(K)
                                            + "]^" + std::to_string(n));
        out.success = true;
        out.trace.add_round(to_string(*out.V)).note("shortcut", "full cube");
        out.trace.outcome = "success";
        return out;
    }
    if (a.empty())
        return fail(std::move(out), "empty set");
    const Rational delta = density(a);
    Rational half = delta / 2;
    half.canonicalize();
    auto dim = ctx.restricted_dimension(k, m, delta);
    if (!dim)
        return fail(std::move(out), "missing oracle value mdhj(" + std::to_string(k) + ", " + std::to_string(m) + ", "
                                        + to_string(half) + ")");
    const int M = *dim;
    out.trace.param("delta", delta);
    out.trace.param("M", M);

    auto uni = uniformize(a, M, half);
    out.trace.children.push_back(uni.trace);
    if (!uni.success)
        return fail(std::move(out), "uniformize at dimension " + std::to_string(M) + " exhausted");
    const Subspace& w = *uni.V;
    const int l = uni.l;
    const Index tail = cube_size(K, n - l);

    // Densest fiber of A over the restricted copy Z = W↾k.
    const auto z = w.point_indices(k);
    Index best = 0, best_count = 0;
    for (Index y = 0; y < tail; ++y) {
        Index c = 0;
        for (Index zi : z)
            c += a.contains(zi * tail + y);
        if (c > best_count) {
            best_count = c;
            best = y;
        }
    }
    require(Rational(to_big(best_count)) >= half * Rational(to_big(z.size())),
            "densest fiber over W restricted to [k] has density >= delta/2");
    PointSet model(k, M);
    for (std::size_t j = 0; j < z.size(); ++j)
        if (a.contains(z[j] * tail + best))
            model.insert(j);
    auto& round = out.trace.add_round(to_string(w));
    round.note("fiber", to_string(Word::from_index(K, n - l, best)));
    round.set("fiber density", density(model));

    auto inner = multidim_lift(model, m, ctx);
    out.trace.children.push_back(inner.trace);
    if (!inner.success)
        return fail(std::move(out), "lift inside the model cube: " + inner.reason);
    Subspace v = concat(compose(w, inner.V->generator().with_alphabet(K)), Word::from_index(K, n - l, best));
    require(restricted_inside(a, v, k), "V restricted to [k] lies inside A");
    out.trace.verified("V restricted to [k] inside A");
    out.success = true;
    out.V = v;
    out.trace.outcome = "success";
    return out;
}

} // namespace dhj
