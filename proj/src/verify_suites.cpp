#include "dhj/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dhj/bounds.hpp"
#include "dhj/engine.hpp"
#include "dhj/linefree.hpp"

namespace dhj {

bool SuiteResult::ok() const
{
    for (const auto& t : tallies)
        if (t.failed)
            return false;
    return true;
}

namespace {

class Recorder {
public:
    explicit Recorder(SuiteResult& r) : r_(r) {}

    void check(const std::string& property, bool ok)
    {
        auto& t = tally(property);
        (ok ? t.passed : t.failed)++;
    }
    void skip(const std::string& property) { tally(property).skipped++; }

private:
    PropertyTally& tally(const std::string& property)
    {
        for (auto& t : r_.tallies)
            if (t.property == property)
                return t;
        r_.tallies.push_back({property});
        return r_.tallies.back();
    }
    SuiteResult& r_;
};

BigInt binomial(int n, int r)
{
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, r);
    return b;
}

void lines_suite(Recorder& rec, std::uint64_t)
{
    for (int k = 2; k <= 4; ++k)
        for (int n = 1; n <= 5; ++n) {
            auto lines = enumerate_lines(k, n);
            rec.check("count_lines = |enumerate_lines|", count_lines(k, n) == BigInt(to_big(lines.size())));
            rec.check("count_lines = (k+1)^n - k^n", count_lines(k, n) == pow(BigInt(k + 1), n) - pow(BigInt(k), n));
            bool sized = true;
            for (const auto& l : lines)
                sized = sized && l.point_indices().size() == static_cast<std::size_t>(k);
            rec.check("every line has k distinct points", sized);
        }
}

void canonical_suite(Recorder& rec, std::uint64_t)
{
    for (int k = 2; k <= 4; ++k)
        for (int n = 1; n <= 6; ++n) {
            bool ok = true;
            for (Index i = 0; i < cube_size(k, n); ++i)
                ok = ok && Word::from_index(k, n, i).index() == i;
            rec.check("index/word round trip", ok);
        }
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= std::min(n, 2); ++m) {
            std::map<std::vector<Index>, int> seen;
            for (const auto& v : enumerate_subspaces(2, n, m)) {
                auto pts = v.point_indices();
                std::sort(pts.begin(), pts.end());
                ++seen[pts];
            }
            bool distinct = true;
            for (auto& [pts, c] : seen)
                distinct = distinct && c == 1;
            rec.check("canonical words give distinct point sets", distinct);
        }
    for (int n = 2; n <= 4; ++n)
        for (const auto& v : enumerate_subspaces(3, n, 2))
            for (const auto& l : enumerate_lines(3, 2)) {
                Subspace c = compose(v, l.generator());
                bool ok = true;
                for (int a = 1; a <= 3; ++a) {
                    std::vector<int> letter{a};
                    ok = ok && embed(v, instantiate(l.generator(), letter)) == instantiate(c.generator(), letter);
                }
                rec.check("embed after instantiate = instantiate after compose", ok);
            }
}

void slice_suite(Recorder& rec, std::uint64_t seed)
{
    for (int c = 0; c < 200; ++c) {
        int k = 2 + c % 2, n = 2 + c % 4;
        PointSet a = random_set(k, n, seed * 1000 + c, 1 + c % 3, 4);
        for (int l = 1; l < n; ++l) {
            Rational sum = 0;
            for (Index x = 0; x < cube_size(k, l); ++x)
                sum += density(slice(a, l, x));
            rec.check("average slice density = density", sum / Rational(to_big(cube_size(k, l))) == density(a));
        }
        rec.check("density in the identity subspace = density", density_in(a, identity_subspace(k, n)) == density(a));
        PointSet b = random_set(k, n, seed * 1000 + c + 500, 1, 2) - a;
        rec.check("density is additive on disjoint sets", density(a | b) == density(a) + density(b));
    }
}

void insensitivity_suite(Recorder& rec, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (int c = 0; c < 200; ++c) {
        int n = 1 + c % 5;
        LetterPair p{1 + static_cast<int>(rng() % 2), 3};
        PointSet a = random_insensitive_set(3, n, p, rng(), 1, 2);
        PointSet b = random_insensitive_set(3, n, p, rng(), 1, 3);
        rec.check("intersection stays insensitive", is_insensitive(a & b, p));
        rec.check("union stays insensitive", is_insensitive(a | b, p));
        rec.check("complement stays insensitive", is_insensitive(a.complement(), p));
        PointSet r = random_set(3, n, rng(), 1, 2);
        rec.check("insensitive iff equal to its closure", is_insensitive(r, p) == (insensitive_closure(r, p) == r));
        Word x = Word::from_index(3, n, rng() % cube_size(3, n));
        Word y = Word::from_index(3, n, representative(3, n, x.index(), p));
        Word z = Word::from_index(3, n, rng() % cube_size(3, n));
        rec.check("equivalence is reflexive", equivalent(x, x, p));
        rec.check("equivalence is symmetric", equivalent(x, y, p) == equivalent(y, x, p));
        rec.check("equivalence is transitive",
                  !(equivalent(x, y, p) && equivalent(y, z, p)) || equivalent(x, z, p));
    }
}

void search_suite(Recorder& rec, std::uint64_t seed)
{
    for (int c = 0; c < 60; ++c) {
        int k = 2 + c % 2, n = 2 + c % 3;
        PointSet a = random_set(k, n, seed * 77 + c, 3, 4);
        auto l = find_line(a);
        bool brute = !is_line_free(a);
        rec.check("find_line agrees with exhaustive scan", l.found() == brute);
        if (l.found())
            rec.check("found line lies in A", subspace_inside(a, *l.subspace));
        auto s = find_subspace(a, 2);
        if (s.found())
            rec.check("found subspace lies in A", subspace_inside(a, *s.subspace));
    }
    for (int n = 1; n <= 5; ++n)
        rec.check("max_linefree(2,n) = C(n, n/2)", BigInt(to_big(max_linefree(2, n).size)) == binomial(n, n / 2));
    SearchBudget one, four;
    four.jobs = 4;
    for (auto [k, n] : {std::pair{2, 5}, std::pair{3, 2}}) {
        auto a = max_linefree(k, n, one), b = max_linefree(k, n, four);
        rec.check("witness independent of parallelism", a.size == b.size && a.witness == b.witness);
    }
}

void uniformize_suite(Recorder& rec, std::uint64_t seed)
{
    const Rational eps(1, 2);
    for (int c = 0; c < 100; ++c) {
        PointSet a = random_set(2, 6, seed * 100 + c, 1 + c % 3, 4);
        auto u = uniformize(a, 1, eps);
        rec.check("succeeds when n >= m k^m / eps", u.success);
        rec.check("at most floor(1/rho) + 1 rounds", u.trace.rounds.size() <= 3);
        if (u.success) {
            bool ok = true;
            for (Index x : u.V->point_indices())
                ok = ok && density(slice(a, u.l, x)) >= density(a) - eps;
            rec.check("dens(A_x) >= dens(A) - eps on V", ok);
        }
    }
}

TilingPlan suite_plan()
{
    TilingPlan plan;
    plan.k = 2;
    plan.beta = Rational(1, 4);
    plan.M1 = {{1, 1}, {2, 2}};
    plan.F = {{1, 2}};
    return plan;
}

void tiling_suite(Recorder& rec, std::uint64_t seed)
{
    EngineContext ctx;
    const auto t = TilingParameters::make(2, Rational(1, 8), 1, 1);
    for (int c = 0; c < 50; ++c) {
        int i = 1 + c % 2;
        PointSet d = random_insensitive_set(3, 6, {i, 3}, seed * 50 + c, 1, 2);
        auto r = tile_insensitive(d, i, t, ctx);
        if (!r.success) {
            rec.skip("tiles are disjoint and inside D");
            continue;
        }
        rec.check("tiles are disjoint and inside D", family_is_valid(r.family, d, 1));
        rec.check("residual < 2 beta", density(d - family_union(r.family, 3, 6)) < 2 * t.beta);
        rec.check("rounds <= floor(1/Theta)", BigInt(r.rounds) <= floor(1 / t.Theta));
    }
}

void intersection_suite(Recorder& rec, std::uint64_t seed)
{
    EngineContext ctx;
    const TilingPlan plan = suite_plan();
    for (int c = 0; c < 50; ++c) {
        PointSet d1 = random_insensitive_set(3, 6, {1, 3}, seed * 50 + c, 7, 8);
        PointSet d2 = random_insensitive_set(3, 6, {2, 3}, seed * 50 + c + 1000, 7, 8);
        auto one = tile_intersection({d1}, 1, 1, plan, ctx);
        auto direct = tile_insensitive(d1, 1, plan.at(1), ctx);
        rec.check("r = 1 matches the single-set tiling", one.success == direct.success && one.family == direct.family);
        auto two = tile_intersection({d1, d2}, 2, 1, plan, ctx);
        if (!two.success) {
            rec.skip("r = 2 residual < 4 beta");
            continue;
        }
        PointSet d = d1 & d2;
        rec.check("r = 2 tiles are disjoint and inside D1 ∩ D2", family_is_valid(two.family, d, 1));
        rec.check("r = 2 residual < 4 beta", density(d - family_union(two.family, 3, 6)) < 4 * plan.beta);
    }
}

void bounds_suite(Recorder& rec, std::uint64_t)
{
    OracleTable table;
    table.set_dhj(2, Rational(1, 4), 9);
    auto p = base_params(2, 1, table);
    rec.check("m0 = 9", p.m0 == 9);
    rec.check("theta = 1/76684", p.theta == Rational(1, 76684));
    rec.check("eta = 1/3680832", p.eta == Rational(1, 3680832));
    rec.check("gamma = 1/(2 * 3680832^2)", p.gamma == Rational(1) / (2 * Rational(3680832) * Rational(3680832)));
    table.set_dhj(2, Rational(1, 4), 9);
    auto star = mdhj_star_bound(2, BigQuantity(1L), Rational(1, 2), table);
    rec.check("mdhj*(2, 1, 1/2) = 708588", star.is_exact() && star.integer() == 708588);
    auto f = F_of(BigQuantity(1L), Rational(1, 2), 2, BigQuantity(2L));
    rec.check("F(1, 1/2) with M1 = 2 is 192", f.is_exact() && f.integer() == 192);
    try {
        mdhj_bound(2, BigQuantity(2L), Rational(1, 2), table);
        rec.check("missing key is reported exactly", false);
    } catch (const MissingOracleValue& e) {
        rec.check("missing key is reported exactly", e.key() == "dhj(2, 1/78732)");
    }
}

void wordset_suite(Recorder& rec, std::uint64_t seed)
{
    for (int c = 0; c < 40; ++c) {
        int k = 2 + c % 3, n = 1 + c % 4;
        PointSet a = random_set(k, n, seed * 40 + c, 1, 2);
        std::ostringstream first;
        write_wordset(first, a);
        std::istringstream in(first.str());
        PointSet b = read_wordset(in);
        std::ostringstream second;
        write_wordset(second, b);
        rec.check("parse then emit is the identity", a == b && first.str() == second.str());
    }
}

const std::map<std::string, std::function<void(Recorder&, std::uint64_t)>>& suites()
{
    static const std::map<std::string, std::function<void(Recorder&, std::uint64_t)>> all{
        {"lines", lines_suite},
        {"canonical", canonical_suite},
        {"slice-averaging", slice_suite},
        {"insensitivity", insensitivity_suite},
        {"search", search_suite},
        {"uniformize", uniformize_suite},
        {"tiling", tiling_suite},
        {"tile-intersection", intersection_suite},
        {"bounds", bounds_suite},
        {"wordset", wordset_suite},
    };
    return all;
}

} // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites())
        out.push_back(name);
    return out;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed)
{
    auto it = suites().find(name);
    if (it == suites().end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    SuiteResult r{name, {}};
    Recorder rec(r);
    it->second(rec, seed);
    return r;
}

} // namespace dhj
