#include "dhj/engine.hpp"

#include <map>
#include <stdexcept>

namespace dhj {

namespace {

TilingResult tiling_not_met(TilingResult out, std::string stage)
{
    out.success = false;
    out.stage = stage;
    out.trace.outcome = "hypothesis-not-met: " + stage;
    return out;
}

Rational ratio(Index a, Index b)
{
    Rational r(to_big(a), to_big(b));
    r.canonicalize();
    return r;
}

} // namespace

PointSet family_union(const std::vector<Subspace>& family, int k, int n)
{
    PointSet u(k, n);
    for (const auto& v : family)
        v.for_each_point(k, [&](Index i) {
            u.insert(i);
            return true;
        });
    return u;
}

bool family_is_valid(const std::vector<Subspace>& family, const PointSet& inside, int m)
{
    PointSet seen(inside.k(), inside.n());
    for (const auto& v : family) {
        if (v.k() != inside.k() || v.length() != inside.n() || v.dimension() != m)
            return false;
        bool ok = v.for_each_point(v.k(), [&](Index i) {
            if (!inside.contains(i) || seen.contains(i))
                return false;
            seen.insert(i);
            return true;
        });
        if (!ok)
            return false;
    }
    return true;
}

TilingResult tile_insensitive(const PointSet& d, int i, const TilingParameters& t, const EngineContext& ctx)
{
    const int K = d.k(), n = d.n(), m = t.m, M1 = t.M1;
    if (t.k != K - 1)
        throw std::invalid_argument("tile_insensitive: tiling parameters are for alphabet " + std::to_string(t.k + 1));
    const LetterPair pair{i, K};
    check_pair(K, pair);
    if (!is_insensitive(d, pair))
        throw std::invalid_argument("tile_insensitive: D is not (" + std::to_string(i) + "," + std::to_string(K)
                                    + ")-insensitive");
    TilingResult out;
    out.trace.procedure = "tile_insensitive";
    out.trace.param("beta", t.beta);
    out.trace.param("Theta", t.Theta);
    out.trace.param("m", m);
    out.trace.param("M1", M1);

    PointSet residual = d;
    const BigInt round_cap = floor(1 / t.Theta);
    const Index fiber_size = cube_size(K, M1);
    for (int r = 1; density(residual) >= 2 * t.beta; ++r) {
        require(BigInt(r) <= round_cap, "tiling exceeded floor(1/Theta) rounds");
        const int a_len = n - r * M1, b_len = (r - 1) * M1;
        if (a_len < 0)
            return tiling_not_met(std::move(out), "block " + std::to_string(r) + " of length " + std::to_string(M1)
                                                      + " does not fit in n = " + std::to_string(n));
        const Index xs = cube_size(K, a_len), ys = cube_size(K, b_len);
        const Index x_stride = fiber_size * ys;
        auto fiber_of = [&](Index x, Index y) {
            PointSet f(K, M1);
            for (Index z = 0; z < fiber_size; ++z)
                if (residual.contains(x * x_stride + z * ys + y))
                    f.insert(z);
            return f;
        };

        struct Ballot {
            Subspace v;
            Index votes;
        };
        std::map<std::vector<int>, Ballot> ballots;
        Index dense = 0, missed = 0;
        for (Index x = 0; x < xs; ++x)
            for (Index y = 0; y < ys; ++y) {
                PointSet f = fiber_of(x, y);
                if (density(f) < t.beta)
                    continue;
                ++dense;
                require(is_insensitive(f, pair), "fibers of the residual stay insensitive");
                auto found = ctx.restricted_oracle(f, m);
                if (!found.found()) {
                    ++missed;
                    continue;
                }
                auto [it, fresh] = ballots.try_emplace(found.subspace->generator().symbols(), Ballot{*found.subspace, 0});
                ++it->second.votes;
            }
        const Ballot* winner = nullptr;
        for (const auto& [key, b] : ballots)
            if (!winner || b.votes > winner->votes
                || (b.votes == winner->votes && lex_less(b.v.generator(), winner->v.generator())))
                winner = &b;
        auto& round = out.trace.add_round(winner ? to_string(winner->v) : std::string("-"));
        round.set("dense contexts", ratio(dense, xs * ys));
        round.set("contexts without a subspace", ratio(missed, xs * ys));
        if (!winner)
            return tiling_not_met(std::move(out), "no dense fiber holds an m-dimensional restricted subspace");

        const auto inner = winner->v.point_indices();
        Index removed = 0;
        for (Index x = 0; x < xs; ++x)
            for (Index y = 0; y < ys; ++y) {
                bool inside = true;
                for (Index z : inner)
                    inside = inside && residual.contains(x * x_stride + z * ys + y);
                if (!inside)
                    continue;
                std::vector<int> symbols;
                if (a_len > 0)
                    symbols = Word::from_index(K, a_len, x).letters();
                for (int s : winner->v.generator().symbols())
                    symbols.push_back(s);
                if (b_len > 0) {
                    Word tail = Word::from_index(K, b_len, y);
                    symbols.insert(symbols.end(), tail.letters().begin(), tail.letters().end());
                }
                Subspace piece(VariableWord(K, std::move(symbols)));
                for (Index q : piece.point_indices())
                    residual.erase(q);
                removed += inner.size();
                out.family.push_back(std::move(piece));
            }
        Rational gain = ratio(removed, residual.universe());
        round.set("gain", gain);
        out.rounds = r;
        if (gain < t.Theta)
            return tiling_not_met(std::move(out), "round " + std::to_string(r) + " covered " + to_string(gain)
                                                      + " < Theta");
    }

    require(family_is_valid(out.family, d, m), "tiles are disjoint m-dimensional subspaces inside D");
    PointSet left = d - family_union(out.family, K, n);
    out.residual = density(left);
    require(out.residual < 2 * t.beta, "uncovered part has density < 2 beta");
    out.trace.verified("tiles are disjoint m-dimensional subspaces inside D");
    out.trace.verified("dens(D minus tiles) < 2 beta");
    out.success = true;
    out.trace.outcome = "success";
    return out;
}

TilingResult tile_intersection(const std::vector<PointSet>& parts, int r, int m, const TilingPlan& plan,
                               const EngineContext& ctx)
{
    if (r < 1 || static_cast<std::size_t>(r) > parts.size())
        throw std::invalid_argument("tile_intersection: need 1 <= r <= number of sets");
    const int K = parts[0].k(), n = parts[0].n();
    TilingResult out;
    out.trace.procedure = "tile_intersection";
    out.trace.toy = plan.toy;
    out.trace.param("r", r);
    out.trace.param("m", m);

    TilingParameters here;
    try {
        here = plan.at(m);
    } catch (const std::out_of_range& e) {
        return tiling_not_met(std::move(out), e.what());
    }
    if (r == 1) {
        auto t = tile_insensitive(parts[0], 1, here, ctx);
        t.trace.toy = plan.toy;
        return t;
    }
    int outer_m = 0;
    try {
        outer_m = plan.F_of(m);
    } catch (const std::out_of_range& e) {
        return tiling_not_met(std::move(out), e.what());
    }
    auto outer = tile_intersection(parts, r - 1, outer_m, plan, ctx);
    out.trace.children.push_back(outer.trace);
    if (!outer.success)
        return tiling_not_met(std::move(out), "tiling of the first " + std::to_string(r - 1) + " sets: " + outer.stage);

    const PointSet& last = parts[r - 1];
    Index tiled = 0;
    for (const auto& v : outer.family) {
        PointSet e = pullback(last, v);
        if (density(e) < 2 * plan.beta)
            continue;
        ++tiled;
        auto inner = tile_insensitive(e, r, here, ctx);
        if (!inner.success) {
            out.trace.children.push_back(inner.trace);
            return tiling_not_met(std::move(out), "tiling inside " + to_string(v) + ": " + inner.stage);
        }
        for (const auto& w : inner.family)
            out.family.push_back(compose(v, w));
    }
    out.trace.add_round().set("outer tiles", Rational(to_big(outer.family.size()))).set("retiled", Rational(to_big(tiled)));

    PointSet d = PointSet::full(K, n);
    for (int i = 0; i < r; ++i)
        d &= parts[i];
    require(family_is_valid(out.family, d, m), "tiles are disjoint m-dimensional subspaces inside the intersection");
    out.trace.verified("tiles are disjoint m-dimensional subspaces inside the intersection");
    out.residual = density(d - family_union(out.family, K, n));
    out.rounds = outer.rounds + 1;
    if (out.residual >= 2 * r * plan.beta)
        return tiling_not_met(std::move(out), "uncovered part " + to_string(out.residual) + " >= 2 r beta");
    out.trace.verified("dens(D minus tiles) < 2 r beta");
    out.success = true;
    out.trace.outcome = "success";
    return out;
}

} // namespace dhj
