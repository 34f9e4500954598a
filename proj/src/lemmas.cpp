#include "dhj/engine.hpp"

#include <map>
#include <stdexcept>

namespace dhj {

namespace {

Rational ratio(Index a, Index b)
{
    Rational r(to_big(a), to_big(b));
    r.canonicalize();
    return r;
}

void check_params(const PointSet& a, int m, const ProofParameters& p, const char* who)
{
    if (a.k() != p.k + 1)
        throw std::invalid_argument(std::string(who) + ": set alphabet must be k+1 = " + std::to_string(p.k + 1));
    if (m < 1)
        throw std::invalid_argument(std::string(who) + ": m must be >= 1");
}

void record_params(ProcedureTrace& t, const ProofParameters& p)
{
    t.toy = p.toy;
    t.param("delta", p.delta);
    t.param("theta", p.theta);
    t.param("eta", p.eta);
    t.param("gamma", p.gamma);
}

// Points of the restricted copy of each line of [k]^m under v, in [K]^len(v).
std::vector<std::vector<Index>> restricted_lines(const Subspace& v, int k)
{
    std::vector<std::vector<Index>> out;
    for_each_line(k, v.dimension(), [&](const Line& l) {
        out.push_back(compose(v, l.generator()).point_indices(k));
        return true;
    });
    return out;
}

// Number of y in [K]^(n-l) with u⌢y in A for every u.
Index common_fibers(const PointSet& a, int l, const std::vector<Index>& points)
{
    const Index tail = cube_size(a.k(), a.n() - l);
    Index c = 0;
    for (Index y = 0; y < tail; ++y) {
        bool all = true;
        for (Index u : points)
            if (!a.contains(u * tail + y)) {
                all = false;
                break;
            }
        c += all;
    }
    return c;
}

Index count_in(const PointSet& a, const Subspace& v)
{
    Index c = 0;
    v.for_each_point(v.k(), [&](Index i) {
        c += a.contains(i);
        return true;
    });
    return c;
}

template <class R>
R not_met(R out, std::string stage)
{
    out.outcome = Outcome::HypothesisNotMet;
    out.stage = stage;
    out.trace.outcome = "hypothesis-not-met: " + stage;
    return out;
}

} // namespace

std::optional<std::pair<Subspace, Rational>> find_dense_subspace(const PointSet& a, int m, const Rational& threshold)
{
    std::optional<std::pair<Subspace, Rational>> out;
    const Index size = checked_power(a.k(), m);
    const Rational need = threshold * Rational(to_big(size));
    for_each_subspace(a.k(), a.n(), m, [&](const Subspace& v) {
        Index c = count_in(a, v);
        if (Rational(to_big(c)) >= need) {
            out.emplace(v, ratio(c, size));
            return false;
        }
        return true;
    });
    return out;
}

// ------------------------------------------------------------ uniform lines

UniformLinesResult extract_uniform_lines(const PointSet& a, int m, const ProofParameters& p, const EngineContext& ctx)
{
    check_params(a, m, p, "extract_uniform_lines");
    if (m < p.m0)
        throw std::invalid_argument("extract_uniform_lines: m must be >= m0");
    const int K = a.k(), k = p.k, n = a.n();
    UniformLinesResult out;
    record_params(out.trace, p);

    if (density(a) < p.delta)
        return not_met(std::move(out), "uniformize: dens(A) >= delta fails");
    auto G = ctx.gr_dimension(k, m);
    if (!G)
        return not_met(std::move(out), "missing oracle value gr(" + std::to_string(k) + ", " + std::to_string(m) + ")");
    out.trace.param("G", *G);
    const Rational eps = p.eta * p.eta / 2;
    auto uni = uniformize(a, *G, eps);
    out.trace.children.push_back(uni.trace);
    if (!uni.success)
        return not_met(std::move(out), "uniformize: block of dimension " + std::to_string(*G) + " does not fit");
    const Subspace& v = *uni.V;
    const int l = uni.l;
    const Index tail = cube_size(K, n - l);

    // Lines of the restricted copy whose fibers share a theta-dense set.
    std::vector<Line> model_lines = enumerate_lines(k, *G);
    std::vector<Line> rich;
    for (const Line& ml : model_lines) {
        auto pts = compose(v, ml.generator()).point_indices(k);
        if (ratio(common_fibers(a, l, pts), tail) >= p.theta)
            rich.push_back(ml);
    }
    auto& round = out.trace.add_round(to_string(v));
    round.set("rich line fraction", ratio(rich.size(), model_lines.size()));

    auto gr = ctx.gr_oracle(k, *G, rich, m, GrPreference::Contained);
    if (!gr.search.found()) {
        gr = ctx.gr_oracle(k, *G, rich, m, GrPreference::Either);
        if (!gr.search.found())
            return not_met(std::move(out), "partition search: no " + std::to_string(m)
                                               + "-dimensional subspace with all lines on one side ("
                                               + to_string(gr.search.status) + ")");
    }
    const Subspace& y = *gr.search.subspace;
    round.note("partition subspace", to_string(y));

    if (!gr.contained) {
        // Disjoint side: vote for lines in dense fibers over an m0-dimensional
        // piece; no line can collect theta of the fibers.
        std::optional<Subspace> zm;
        for_each_subspace(k, m, p.m0, [&](const Subspace& s) {
            zm = s;
            return false;
        });
        Subspace z = compose(v, compose(y, *zm).generator());
        auto zpts = z.point_indices(k);
        auto zlines = restricted_lines(z, k);
        std::map<std::size_t, Index> votes;
        Index dense = 0;
        for (Index yy = 0; yy < tail; ++yy) {
            Index c = 0;
            for (Index zi : zpts)
                c += a.contains(zi * tail + yy);
            if (Rational(to_big(c)) * 4 < p.delta * Rational(to_big(zpts.size())))
                continue;
            ++dense;
            for (std::size_t li = 0; li < zlines.size(); ++li) {
                bool inside = true;
                for (Index q : zlines[li])
                    inside = inside && a.contains(q * tail + yy);
                if (inside) {
                    ++votes[li];
                    break;
                }
            }
        }
        Index best = 0;
        for (auto& [li, c] : votes)
            best = std::max(best, c);
        round.set("dense fibers", ratio(dense, tail));
        round.set("best line vote", ratio(best, tail));
        require(ratio(best, tail) < p.theta, "a line outside the rich set cannot collect theta of the fibers");
        return not_met(std::move(out), "partition search: subspace avoids every rich line; best vote "
                                           + to_string(ratio(best, tail)) + " < theta");
    }

    Subspace u = compose(v, y.generator().with_alphabet(K));
    const Rational floor_density = p.delta - eps;
    for (Index ui : u.point_indices())
        require(density(slice(a, l, ui)) >= floor_density, "dens(A_u) >= delta - eta^2/2 on U");
    out.trace.verified("dens(A_u) >= delta - eta^2/2 for every u in U");
    for (const auto& pts : restricted_lines(u, k)) {
        PointSet common = PointSet::full(K, n - l);
        for (Index ui : pts)
            common &= slice(a, l, ui);
        require(density(common) >= p.theta, "common fiber of each restricted line of U has density >= theta");
    }
    out.trace.verified("common fiber of every line of U restricted to [k] has density >= theta");
    out.outcome = Outcome::Success;
    out.l = l;
    out.U = u;
    out.trace.outcome = "success";
    return out;
}

// ------------------------------------------------------------ line dichotomy

LineDichotomyResult line_dichotomy(const PointSet& a, int m, const ProofParameters& p, const EngineContext& ctx,
                                   bool scan_increment)
{
    check_params(a, m, p, "line_dichotomy");
    const int K = a.k(), k = p.k, n = a.n();
    LineDichotomyResult out;
    record_params(out.trace, p);

    if (scan_increment) {
        if (auto x = find_dense_subspace(a, m, p.delta + p.eta * p.eta / 2)) {
            out.outcome = Outcome::Increment;
            out.X = x->first;
            out.density = x->second;
            out.trace.add_round(to_string(x->first)).set("density", x->second);
            out.trace.outcome = "increment";
            return out;
        }
        out.trace.verified("no m-dimensional subspace has density >= delta + eta^2/2");
    }

    auto ul = extract_uniform_lines(a, m, p, ctx);
    out.trace.children.push_back(ul.trace);
    if (ul.outcome != Outcome::Success)
        return not_met(std::move(out), "extract_uniform_lines: " + ul.stage);
    const Subspace& u = *ul.U;
    const int l = ul.l;
    const Index tail = cube_size(K, n - l);
    const auto upts = u.point_indices();
    const auto lines = restricted_lines(u, k);

    PointSet h1(K, n - l), h2(K, n - l);
    const Rational h1_need = (p.delta - 2 * p.eta) * Rational(to_big(upts.size()));
    const Rational h2_need = p.theta / 2 * Rational(to_big(lines.size()));
    for (Index y = 0; y < tail; ++y) {
        Index c = 0;
        for (Index ui : upts)
            c += a.contains(ui * tail + y);
        if (Rational(to_big(c)) >= h1_need)
            h1.insert(y);
        Index rich = 0;
        for (const auto& pts : lines) {
            bool inside = true;
            for (Index q : pts)
                inside = inside && a.contains(q * tail + y);
            rich += inside;
        }
        if (Rational(to_big(rich)) >= h2_need)
            h2.insert(y);
    }
    auto& round = out.trace.add_round(to_string(u));
    round.set("dense fibers", density(h1));
    round.set("line-rich fibers", density(h2));
    require(density(h1) >= 1 - p.eta, "dense fibers have density >= 1 - eta");
    require(density(h2) >= p.theta / 2, "line-rich fibers have density >= theta/2");
    PointSet both = h1 & h2;
    if (both.empty())
        return not_met(std::move(out), "no fiber is both dense and line rich (needs eta < theta/2)");
    const Index y0 = both.members().front();
    Subspace w = concat(u, Word::from_index(K, n - l, y0));
    round.note("fiber", to_string(Word::from_index(K, n - l, y0)));

    Rational dw = density_in(a, w);
    require(dw >= p.delta - 2 * p.eta, "dens_W(A) >= delta - 2 eta");
    Index inside = 0, total = 0;
    for_each_line(k, m, [&](const Line& ml) {
        ++total;
        inside += restricted_inside(a, compose(w, ml.generator()), k);
        return true;
    });
    require(Rational(to_big(inside)) >= p.theta / 2 * Rational(to_big(total)),
            "at least theta/2 of the lines of W restricted to [k] lie in A");
    out.trace.verified("dens_W(A) >= delta - 2 eta");
    out.trace.verified("at least theta/2 of the lines of W restricted to [k] lie in A");
    out.outcome = Outcome::Success;
    out.W = w;
    out.density = dw;
    out.trace.outcome = "line-rich";
    return out;
}

// ------------------------------------------------------------ structured set

StructuredResult structured_set(const PointSet& a, int m, const ProofParameters& p, const EngineContext& ctx,
                                bool scan_increment)
{
    check_params(a, m, p, "structured_set");
    const int K = a.k(), k = p.k;
    StructuredResult out;
    record_params(out.trace, p);

    auto found = ctx.line_oracle(a);
    if (found.found()) {
        require(subspace_inside(a, *found.subspace), "reported line lies inside A");
        out.outcome = Outcome::LineFound;
        out.line = found.subspace;
        out.trace.outcome = "line-found";
        return out;
    }
    auto ld = line_dichotomy(a, m, p, ctx, scan_increment);
    out.trace.children.push_back(ld.trace);
    if (ld.outcome == Outcome::Increment) {
        out.outcome = Outcome::Increment;
        out.X = ld.X;
        out.trace.outcome = "increment";
        return out;
    }
    if (ld.outcome != Outcome::Success)
        return not_met(std::move(out), "line_dichotomy: " + ld.stage);
    const Subspace& w = *ld.W;
    PointSet am = pullback(a, w);

    const Index size = am.universe();
    std::vector<PointSet> parts;
    for (int i = 1; i <= k; ++i) {
        PointSet ci(K, m);
        for (Index x = 0; x < size; ++x)
            if (am.contains(substitute(Word::from_index(K, m, x), K, i)))
                ci.insert(x);
        require(is_insensitive(ci, {i, K}), "C_i is (i,k+1)-insensitive");
        parts.push_back(std::move(ci));
    }
    PointSet c = PointSet::full(K, m);
    for (const auto& ci : parts)
        c &= ci;
    out.trace.verified("each C_i is (i,k+1)-insensitive");
    auto& round = out.trace.add_round(to_string(w));
    round.set("dens_W(C)", density(c));

    PointSet ac = am & c;
    bool restricted = true;
    ac.for_each([&](Index x) {
        Word w = Word::from_index(K, m, x);
        for (int letter : w.letters())
            restricted = restricted && letter <= k;
    });
    if (!restricted)
        return not_met(std::move(out), "A meets C outside W restricted to [k]: A contains a line");
    Rational lam = pow(Rational(k, k + 1), m);
    require(density(ac) <= lam, "dens_W(A ∩ C) <= lambda^-m");
    out.trace.verified("dens_W(A ∩ C) <= lambda^-m");
    if (!p.toy && m >= p.M0) {
        require(lam <= p.eta, "lambda^-m <= eta for m >= M0");
        out.trace.verified("lambda^-m <= eta");
    }
    if (density(c) < p.theta / 4)
        return not_met(std::move(out), "dens_W(C) >= theta/4 fails");

    PointSet rest = c.complement();
    PointSet arest = am & rest;
    round.set("dens_W(A minus C)", density(arest));
    if (Rational(to_big(arest.count())) < (p.delta + 6 * p.eta) * Rational(to_big(rest.count())))
        return not_met(std::move(out), "dens(A | W minus C) >= delta + 6 eta fails");
    if (density(arest) < p.delta - 3 * p.eta)
        return not_met(std::move(out), "dens_W(A minus C) >= delta - 3 eta fails");
    out.trace.verified("dens(A | W minus C) >= delta + 6 eta and dens_W(A minus C) >= delta - 3 eta");

    out.outcome = Outcome::Success;
    out.W = w;
    out.C_parts = std::move(parts);
    out.C = c;
    out.A_model = am;
    out.trace.outcome = "success";
    return out;
}

// ------------------------------------------------------------ correlation

CorrelateResult correlate(const PointSet& a, int m, const ProofParameters& p, const EngineContext& ctx)
{
    check_params(a, m, p, "correlate");
    const int K = a.k(), k = p.k;
    CorrelateResult out;
    record_params(out.trace, p);

    auto found = ctx.line_oracle(a);
    if (found.found()) {
        require(subspace_inside(a, *found.subspace), "reported line lies inside A");
        out.outcome = Outcome::LineFound;
        out.line = found.subspace;
        out.trace.outcome = "line-found";
        return out;
    }

    auto finish = [&](CorrelateResult r) {
        const PointSet& d = *r.D;
        for (int i = 1; i <= k; ++i)
            require(is_insensitive(r.D_parts[i - 1], {i, K}), "D_i is (i,k+1)-insensitive");
        r.trace.verified("each D_i is (i,k+1)-insensitive");
        PointSet ad = *r.A_model & d;
        r.trace.add_round(to_string(*r.W)).set("dens_W(D)", density(d)).set("dens_W(A ∩ D)", density(ad));
        if (density(d) < p.gamma)
            return not_met(std::move(r), "dens_W(D) >= gamma fails");
        if (Rational(to_big(ad.count())) < (p.delta + p.gamma) * Rational(to_big(d.count())))
            return not_met(std::move(r), "dens_W(A ∩ D) >= (delta + gamma) dens_W(D) fails");
        r.trace.verified("dens_W(D) >= gamma and dens_W(A ∩ D) >= (delta + gamma) dens_W(D)");
        r.outcome = Outcome::Success;
        r.trace.outcome = r.early_branch ? "success (dense subspace)" : "success";
        return r;
    };

    if (auto x = find_dense_subspace(a, m, p.delta + p.eta * p.eta / 2)) {
        out.early_branch = true;
        out.W = x->first;
        out.A_model = pullback(a, x->first);
        out.D_parts.assign(k, PointSet::full(K, m));
        out.D = PointSet::full(K, m);
        return finish(std::move(out));
    }
    out.trace.verified("no m-dimensional subspace has density >= delta + eta^2/2");

    auto st = structured_set(a, m, p, ctx, false);
    out.trace.children.push_back(st.trace);
    if (st.outcome == Outcome::LineFound) {
        out.outcome = Outcome::LineFound;
        out.line = st.line;
        out.trace.outcome = "line-found";
        return out;
    }
    if (st.outcome != Outcome::Success)
        return not_met(std::move(out), "structured_set: " + st.stage);

    const auto& cs = st.C_parts;
    const PointSet& am = *st.A_model;
    PointSet rest = st.C->complement();
    PointSet prefix = PointSet::full(K, m);
    std::vector<PointSet> parts;
    for (int i = 0; i < k; ++i) {
        parts.push_back(cs[i].complement() & prefix);
        prefix &= cs[i];
    }
    PointSet joined(K, m);
    Index total = 0;
    for (const auto& pi : parts) {
        joined |= pi;
        total += pi.count();
    }
    require(joined == rest && total == rest.count(), "P_1..P_k partition W minus C");
    out.trace.verified("P_1..P_k partition W minus C");

    const Rational rest_size(to_big(rest.count()));
    Rational mix = 0;
    int i0 = 0;
    auto& round = out.trace.add_round("partition");
    for (int i = 0; i < k; ++i) {
        Rational li = Rational(to_big(parts[i].count())) / rest_size;
        Rational di = parts[i].empty() ? Rational(0) : ratio((am & parts[i]).count(), parts[i].count());
        li.canonicalize();
        mix += li * di;
        round.set("lambda_" + std::to_string(i + 1), li).set("delta_" + std::to_string(i + 1), di);
        if (!i0 && li >= 3 * p.eta / k && di >= p.delta + 3 * p.eta)
            i0 = i + 1;
    }
    require(mix == Rational(to_big((am & rest).count())) / rest_size, "sum of lambda_i delta_i is dens(A | W minus C)");
    require(i0 > 0, "some part has lambda_i >= 3 eta/k and delta_i >= delta + 3 eta");
    round.set("i0", i0);

    out.W = st.W;
    out.A_model = am;
    out.i0 = i0;
    out.P_parts = parts;
    for (int i = 1; i <= k; ++i) {
        if (i < i0)
            out.D_parts.push_back(cs[i - 1]);
        else if (i == i0)
            out.D_parts.push_back(cs[i - 1].complement());
        else
            out.D_parts.push_back(PointSet::full(K, m));
    }
    PointSet d = PointSet::full(K, m);
    for (const auto& di : out.D_parts)
        d &= di;
    require(d == parts[i0 - 1], "D equals P_i0");
    out.D = d;
    return finish(std::move(out));
}

} // namespace dhj
