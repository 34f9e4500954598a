#include "dhj/engine.hpp"

#include <stdexcept>

namespace dhj {

namespace {

DichotomyOutcome step_not_met(DichotomyOutcome out, std::string stage)
{
    out.outcome = Outcome::HypothesisNotMet;
    out.stage = stage;
    out.trace.outcome = "hypothesis-not-met: " + stage;
    return out;
}

} // namespace

int dichotomy_dimension(int d, const ProofParameters& p, const TilingPlan& plan)
{
    return std::max(p.M0, plan.F_iter(p.k, d));
}

DichotomyOutcome dichotomy_step(const PointSet& a, int d, const ProofParameters& p, const TilingPlan& plan,
                                const EngineContext& ctx)
{
    if (a.k() != p.k + 1)
        throw std::invalid_argument("dichotomy_step: set alphabet must be k+1 = " + std::to_string(p.k + 1));
    if (d < 1)
        throw std::invalid_argument("dichotomy_step: d must be >= 1");
    if (plan.k != p.k)
        throw std::invalid_argument("dichotomy_step: tiling plan is for a different k");
    DichotomyOutcome out;
    out.trace.toy = p.toy || plan.toy;
    out.trace.param("delta", p.delta);
    out.trace.param("gamma", p.gamma);
    out.trace.param("beta", plan.beta);
    if (!p.toy && !plan.toy)
        require(plan.beta == p.beta(), "beta = gamma^2/4k");

    auto found = ctx.line_oracle(a);
    if (found.found()) {
        require(subspace_inside(a, *found.subspace), "reported line lies inside A");
        out.outcome = Outcome::LineFound;
        out.V = found.subspace;
        out.trace.outcome = "line-found";
        return out;
    }

    int md = 0;
    try {
        md = dichotomy_dimension(d, p, plan);
    } catch (const std::out_of_range& e) {
        return step_not_met(std::move(out), e.what());
    }
    out.trace.param("m(d)", md);

    auto cor = correlate(a, md, p, ctx);
    out.trace.children.push_back(cor.trace);
    if (cor.outcome == Outcome::LineFound) {
        out.outcome = Outcome::LineFound;
        out.V = cor.line;
        out.trace.outcome = "line-found";
        return out;
    }
    if (cor.outcome != Outcome::Success)
        return step_not_met(std::move(out), "correlate: " + cor.stage);

    auto tiles = tile_intersection(cor.D_parts, p.k, d, plan, ctx);
    out.trace.children.push_back(tiles.trace);
    if (!tiles.success)
        return step_not_met(std::move(out), "tile_intersection: " + tiles.stage);
    if (tiles.family.empty())
        return step_not_met(std::move(out), "averaging: the tiling is empty");

    const PointSet& am = *cor.A_model;
    const Subspace* best = nullptr;
    Rational best_density = -1;
    for (const auto& v : tiles.family) {
        Rational dv = density_in(am, v);
        if (dv > best_density || (dv == best_density && lex_less(v.generator(), best->generator()))) {
            best_density = dv;
            best = &v;
        }
    }
    PointSet covered = family_union(tiles.family, am.k(), am.n());
    auto& round = out.trace.add_round(to_string(*best));
    round.set("best tile density", best_density);
    round.set("dens(A | tiles)", Rational(to_big((am & covered).count()), to_big(covered.count())));
    const Rational need = p.delta + p.gamma / 2;
    if (best_density < need)
        return step_not_met(std::move(out), "averaging: best tile density " + to_string(best_density)
                                                + " < delta + gamma/2");
    Subspace x = compose(*cor.W, *best);
    out.density = density_in(a, x);
    require(out.density == best_density, "increment density agrees in the ambient cube");
    out.trace.verified("dens_V(A) >= delta + gamma/2");
    out.outcome = Outcome::Increment;
    out.V = x;
    out.trace.outcome = "increment";
    return out;
}

DriverResult dhj_driver(const PointSet& a, const Rational& delta, int d, int round_cap, const ParameterSource& params,
                        const PlanSource& plan, const EngineContext& ctx)
{
    if (round_cap < 1)
        throw std::invalid_argument("dhj_driver: round cap must be >= 1");
    if (!has_density_at_least(a, delta))
        throw std::invalid_argument("dhj_driver: dens(A) < delta");
    DriverResult out;
    out.trace.param("delta", delta);
    out.trace.param("d", d);

    PointSet current = a;
    std::optional<Subspace> embedding;
    auto lift_back = [&](const Line& l) { return embedding ? compose(*embedding, l) : l; };
    BigInt cap = round_cap;
    for (int r = 1;; ++r) {
        out.rounds = r;
        auto found = ctx.line_oracle(current);
        if (found.found()) {
            Line l = lift_back(*found.subspace);
            require(subspace_inside(a, l), "line lies inside the original set");
            out.trace.add_round(to_string(l)).note("result", "line");
            out.outcome = Outcome::LineFound;
            out.line = l;
            out.trace.verified("line inside A");
            out.trace.outcome = "line-found";
            return out;
        }
        Rational dr = r == 1 ? delta : density(current);
        ProofParameters p = params(dr);
        out.trace.toy = out.trace.toy || p.toy;
        if (r == 1) {
            cap = std::min(cap, BigInt(ceil(2 / p.gamma)));
            out.trace.param("round cap", Rational(cap));
        }
        if (BigInt(r) > cap) {
            out.stage = "round cap " + to_string(cap) + " reached";
            out.trace.outcome = "hypothesis-not-met: " + out.stage;
            return out;
        }
        auto step = dichotomy_step(current, d, p, plan(p), ctx);
        out.trace.children.push_back(step.trace);
        auto& round = out.trace.add_round(step.V ? to_string(*step.V) : std::string("-"));
        round.set("delta", dr);
        if (step.outcome == Outcome::LineFound) {
            Line l = lift_back(*step.V);
            require(subspace_inside(a, l), "line lies inside the original set");
            out.outcome = Outcome::LineFound;
            out.line = l;
            out.trace.verified("line inside A");
            out.trace.outcome = "line-found";
            return out;
        }
        if (step.outcome != Outcome::Increment) {
            out.stage = "round " + std::to_string(r) + ": " + step.stage;
            out.trace.outcome = "hypothesis-not-met: " + out.stage;
            return out;
        }
        round.set("boosted density", step.density);
        current = pullback(current, *step.V);
        embedding = embedding ? compose(*embedding, *step.V) : *step.V;
    }
}

} // namespace dhj
