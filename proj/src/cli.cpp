#include "dhj/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "dhj/bounds.hpp"
#include "dhj/engine.hpp"
#include "dhj/linefree.hpp"
#include "dhj/report.hpp"
#include "dhj/verify.hpp"

namespace dhj::cli {

namespace {

struct Options {
    int k = 0;
    int n = 0;
    int m = 0;
    int d = 0;
    int i = 1;
    int horizon = 0;
    int rounds = 1000;
    int M1 = 0;
    std::string delta;
    std::string beta;
    std::string eps;
    std::uint64_t budget_nodes = 0;
    int jobs = 1;
    std::optional<std::uint64_t> seed;
    std::string toy_params;
    std::string oracle_table;
    std::vector<std::string> sets;
    std::string subspace;
    std::string lines_file;
    std::string suite;
    bool restricted = false;
    bool list = false;
    bool json = false;
};

// A negative answer: report it and exit 3.
struct Negative {
    std::string outcome;
};

class Command {
public:
    Command(Options& o, RunReport& r) : o_(o), r_(r) {}

    SearchBudget budget() const
    {
        SearchBudget b;
        if (o_.budget_nodes)
            b.node_cap = o_.budget_nodes;
        b.jobs = o_.jobs;
        b.validate();
        return b;
    }

    PointSet set(std::size_t which = 0)
    {
        if (o_.sets.size() <= which)
            throw std::invalid_argument("missing -A wordset");
        r_.param(which ? "A" + std::to_string(which + 1) : "A", o_.sets[which]);
        return load_wordset(o_.sets[which]);
    }

    Rational rational(const std::string& text, const char* name)
    {
        if (text.empty())
            throw std::invalid_argument(std::string("missing --") + name);
        Rational v = parse_rational(text);
        r_.param(name, to_string(v));
        return v;
    }

    int positive(int v, const char* name)
    {
        if (v < 1)
            throw std::invalid_argument(std::string("--") + name + " must be >= 1");
        r_.param(name, std::to_string(v));
        return v;
    }

    const ParameterOverrides& overrides()
    {
        if (!overrides_) {
            overrides_ = ParameterOverrides{};
            if (!o_.toy_params.empty()) {
                r_.param("toy-params", o_.toy_params);
                overrides_ = load_overrides(o_.toy_params);
            }
        }
        return *overrides_;
    }

    const OracleTable& table()
    {
        if (!table_) {
            table_ = OracleTable{};
            if (!o_.oracle_table.empty()) {
                r_.param("oracle-table", o_.oracle_table);
                table_ = OracleTable::load(o_.oracle_table);
            }
        }
        return *table_;
    }

    ProofParameters params(int k, const Rational& delta)
    {
        const auto& over = overrides();
        int m0 = 0;
        if (over.m0) {
            m0 = *over.m0;
        } else {
            Rational quarter = delta / 4;
            quarter.canonicalize();
            BigInt v = table().require_dhj(k, quarter);
            if (!v.fits_sint_p())
                throw Negative{"undetermined: m0 = " + to_string(v) + " is too large to run"};
            m0 = static_cast<int>(v.get_si());
        }
        ProofParameters p = ProofParameters::build(k, delta, m0, over);
        if (p.toy)
            r_.parameters_flag = "toy";
        return p;
    }

    TilingPlan plan(int k, std::optional<Rational> beta)
    {
        const auto& over = overrides();
        TilingPlan pl;
        pl.k = k;
        pl.M1 = over.M1;
        pl.F = over.F;
        if (!o_.beta.empty())
            beta = rational(o_.beta, "beta");
        else if (over.beta)
            beta = over.beta;
        if (!beta)
            throw std::invalid_argument("tiling needs --beta or a beta override");
        pl.beta = *beta;
        pl.toy = !over.M1.empty() || !over.F.empty() || !o_.beta.empty() || over.beta.has_value();
        if (pl.toy)
            r_.parameters_flag = "toy";
        return pl;
    }

    EngineContext context()
    {
        EngineContext ctx;
        ctx.budget = budget();
        ctx.overrides = overrides();
        ctx.table = &table();
        return ctx;
    }

private:
    Options& o_;
    RunReport& r_;
    std::optional<ParameterOverrides> overrides_;
    std::optional<OracleTable> table_;
};

// ---------------------------------------------------------------- commands

int cmd_lines(Options& o, RunReport& r)
{
    Command c(o, r);
    int k = c.positive(o.k, "k"), n = c.positive(o.n, "n");
    check_alphabet(k);
    auto lines = enumerate_lines(k, n);
    BigInt counted = count_lines(k, n);
    if (counted != BigInt(to_big(lines.size())))
        throw InternalCheckFailure("internal check failed: line count disagrees with enumeration");
    r.value("count", to_string(counted));
    r.certificate.push_back("count_lines equals the size of the enumeration");
    if (o.list)
        for (std::size_t j = 0; j < lines.size(); ++j)
            r.witnesses.push_back(Witness::of_subspace("line " + std::to_string(j + 1), "member", lines[j]));
    r.outcome = "success";
    return exit_ok;
}

int cmd_density(Options& o, RunReport& r)
{
    Command c(o, r);
    PointSet a = c.set();
    r.value("count", std::to_string(a.count()));
    r.value("density", to_string(density(a)));
    if (!o.subspace.empty()) {
        r.param("subspace", o.subspace);
        Subspace v(parse_variable_word(a.k(), o.subspace));
        if (v.length() != a.n())
            throw std::invalid_argument("subspace length differs from n");
        r.value("density in subspace", to_string(density_in(a, v)));
    }
    r.outcome = "success";
    return exit_ok;
}

int search_outcome(const SearchResult& s, RunReport& r, const std::string& label, const std::string& property)
{
    r.value("nodes", std::to_string(s.nodes));
    if (!s.found()) {
        r.outcome = s.status == SearchStatus::Exhausted ? "exhausted" : "not-found";
        return exit_negative;
    }
    r.outcome = "found";
    r.witnesses.push_back(Witness::of_subspace(label, property, *s.subspace));
    r.certificate.push_back(label + " rechecked point by point");
    return exit_ok;
}

int cmd_find_line(Options& o, RunReport& r)
{
    Command c(o, r);
    PointSet a = c.set();
    return search_outcome(find_line(a, c.budget()), r, "line", "inside");
}

int cmd_find_subspace(Options& o, RunReport& r)
{
    Command c(o, r);
    PointSet a = c.set();
    int m = c.positive(o.m, "m");
    if (o.restricted) {
        r.param("restricted", "true");
        return search_outcome(find_restricted_subspace(a, m, c.budget()), r, "subspace", "restricted-inside");
    }
    return search_outcome(find_subspace(a, m, c.budget()), r, "subspace", "inside");
}

int cmd_max_linefree(Options& o, RunReport& r)
{
    Command c(o, r);
    int k = c.positive(o.k, "k"), n = c.positive(o.n, "n");
    auto res = max_linefree(k, n, c.budget());
    r.value("size", std::to_string(res.size));
    r.value("density", to_string(make_rational(res.size, cube_size(k, n))));
    r.value("nodes", std::to_string(res.nodes));
    r.witnesses.push_back(Witness::of_set("witness", "line-free", res.witness));
    r.certificate.push_back("witness is line-free (exhaustive line scan)");
    if (!res.optimal) {
        r.outcome = "exhausted";
        return exit_negative;
    }
    r.outcome = "optimal";
    return exit_ok;
}

int cmd_dhj(Options& o, RunReport& r)
{
    Command c(o, r);
    int k = c.positive(o.k, "k");
    Rational delta = c.rational(o.delta, "delta");
    int horizon = c.positive(o.horizon, "horizon");
    auto res = dhj_value(k, delta, horizon, c.budget());
    for (auto& [n, w] : res.witnesses)
        r.witnesses.push_back(Witness::of_set("n=" + std::to_string(n), "line-free", w));
    for (auto& [n, t] : res.targets)
        r.value("target n=" + std::to_string(n), std::to_string(t));
    if (!res.witnesses.empty())
        r.certificate.push_back("every witness is line-free with at least ceil(delta k^n) points");
    if (res.exhausted) {
        r.outcome = "exhausted";
        return exit_negative;
    }
    if (!res.value) {
        r.outcome = "undetermined";
        r.value("N", "undetermined");
        return exit_negative;
    }
    r.value("N", std::to_string(*res.value));
    r.outcome = "horizon-verified";
    r.certificate.push_back("no line-free set of the target size for n in [N, horizon]");
    return exit_ok;
}

int cmd_gr_search(Options& o, RunReport& r)
{
    Command c(o, r);
    int k = c.positive(o.k, "k"), n = c.positive(o.n, "n"), m = c.positive(o.m, "m");
    std::vector<Line> chosen;
    if (!o.lines_file.empty()) {
        r.param("lines", o.lines_file);
        std::ifstream in(o.lines_file);
        if (!in)
            throw std::runtime_error("cannot open lines file: " + o.lines_file);
        for (std::string line; std::getline(in, line);) {
            if (auto h = line.find('#'); h != std::string::npos)
                line.erase(h);
            std::istringstream ws(line);
            std::string word;
            if (!(ws >> word))
                continue;
            Line l(parse_variable_word(k, word));
            if (l.dimension() != 1 || l.length() != n)
                throw std::invalid_argument("not a line of the cube: " + word);
            chosen.push_back(l);
        }
    } else if (o.seed) {
        r.param("seed", std::to_string(*o.seed));
        std::mt19937_64 rng(*o.seed);
        for (const auto& l : enumerate_lines(k, n))
            if (rng() % 2)
                chosen.push_back(l);
    } else {
        throw std::invalid_argument("gr-search needs --lines file or --seed");
    }
    auto res = gr_partition_search(k, n, chosen, m, GrPreference::Either, c.budget());
    r.value("chosen lines", std::to_string(chosen.size()));
    int code = search_outcome(res.search, r, "subspace", "member");
    if (code == exit_ok)
        r.value("side", res.contained ? "contained" : "disjoint");
    return code;
}

int cmd_uniformize(Options& o, RunReport& r)
{
    Command c(o, r);
    PointSet a = c.set();
    int m = c.positive(o.m, "m");
    Rational eps = c.rational(o.eps, "eps");
    auto res = uniformize(a, m, eps);
    r.trace = res.trace.to_json();
    if (!res.success) {
        r.outcome = "exhausted";
        return exit_negative;
    }
    r.value("l", std::to_string(res.l));
    r.witnesses.push_back(Witness::of_subspace("V", "member", *res.V));
    for (auto& check : res.trace.checks)
        r.certificate.push_back(check);
    r.outcome = "success";
    return exit_ok;
}

int engine_outcome(RunReport& r, const ProcedureTrace& trace, Outcome outcome, const std::string& stage)
{
    r.trace = trace.to_json();
    for (auto& check : trace.checks)
        r.certificate.push_back(check);
    if (outcome == Outcome::HypothesisNotMet) {
        r.outcome = "hypothesis-not-met";
        r.value("stage", stage);
        return exit_negative;
    }
    r.outcome = to_string(outcome);
    return exit_ok;
}

int cmd_tile(Options& o, RunReport& r)
{
    Command c(o, r);
    if (o.sets.empty())
        throw std::invalid_argument("missing -A wordset");
    std::vector<PointSet> parts;
    for (std::size_t j = 0; j < o.sets.size(); ++j)
        parts.push_back(c.set(j));
    const int K = parts[0].k();
    int m = c.positive(o.m, "m");
    TilingPlan plan = c.plan(K - 1, std::nullopt);
    EngineContext ctx = c.context();
    TilingResult res;
    PointSet d = parts[0];
    if (parts.size() == 1) {
        r.param("i", std::to_string(o.i));
        res = tile_insensitive(parts[0], o.i, plan.at(m), ctx);
    } else {
        for (auto& p : parts)
            d &= p;
        res = tile_intersection(parts, static_cast<int>(parts.size()), m, plan, ctx);
    }
    res.trace.toy = plan.toy;
    if (res.success) {
        r.value("tiles", std::to_string(res.family.size()));
        r.value("residual", to_string(res.residual));
        for (std::size_t j = 0; j < res.family.size(); ++j)
            r.witnesses.push_back(Witness::of_subspace("tile " + std::to_string(j + 1), "inside", res.family[j]));
        return engine_outcome(r, res.trace, Outcome::Success, "");
    }
    return engine_outcome(r, res.trace, Outcome::HypothesisNotMet, res.stage);
}

int cmd_correlate(Options& o, RunReport& r)
{
    Command c(o, r);
    PointSet a = c.set();
    int m = c.positive(o.m, "m");
    Rational delta = c.rational(o.delta, "delta");
    ProofParameters p = c.params(a.k() - 1, delta);
    auto res = correlate(a, m, p, c.context());
    if (res.line)
        r.witnesses.push_back(Witness::of_subspace("line", "inside", *res.line));
    if (res.outcome == Outcome::Success) {
        r.witnesses.push_back(Witness::of_subspace("W", "member", *res.W));
        for (std::size_t j = 0; j < res.D_parts.size(); ++j)
            r.witnesses.push_back(Witness::of_set("D_" + std::to_string(j + 1) + " (model of W)", "set", res.D_parts[j]));
        r.value("branch", res.early_branch ? "dense subspace" : "partition");
        r.value("dens_W(D)", to_string(density(*res.D)));
        if (!res.early_branch)
            r.value("i0", std::to_string(res.i0));
    }
    return engine_outcome(r, res.trace, res.outcome, res.stage);
}

int cmd_dichotomy(Options& o, RunReport& r)
{
    Command c(o, r);
    PointSet a = c.set();
    int d = c.positive(o.d, "d");
    Rational delta = c.rational(o.delta, "delta");
    ProofParameters p = c.params(a.k() - 1, delta);
    TilingPlan plan = c.plan(p.k, p.beta());
    auto res = dichotomy_step(a, d, p, plan, c.context());
    if (res.outcome == Outcome::LineFound)
        r.witnesses.push_back(Witness::of_subspace("line", "inside", *res.V));
    if (res.outcome == Outcome::Increment) {
        r.witnesses.push_back(Witness::of_subspace("V", "member", *res.V));
        r.value("density in V", to_string(res.density));
    }
    return engine_outcome(r, res.trace, res.outcome, res.stage);
}

int cmd_drive(Options& o, RunReport& r)
{
    Command c(o, r);
    PointSet a = c.set();
    int d = c.positive(o.d, "d");
    Rational delta = c.rational(o.delta, "delta");
    int cap = c.positive(o.rounds, "rounds");
    const int k = a.k() - 1;
    auto res = dhj_driver(
        a, delta, d, cap, [&](const Rational& dr) { return c.params(k, dr); },
        [&](const ProofParameters& p) { return c.plan(k, p.beta()); }, c.context());
    r.value("rounds", std::to_string(res.rounds));
    if (res.line)
        r.witnesses.push_back(Witness::of_subspace("line", "inside", *res.line));
    return engine_outcome(r, res.trace, res.outcome, res.stage);
}

int cmd_bounds(Options& o, RunReport& r)
{
    Command c(o, r);
    int k = c.positive(o.k, "k");
    Rational delta = c.rational(o.delta, "delta");
    const OracleTable& table = c.table();
    auto p = base_params(k, delta, table);
    r.value("m0", std::to_string(p.m0));
    r.value("theta", to_string(p.theta));
    r.value("eta", to_string(p.eta));
    r.value("gamma", to_string(p.gamma));
    r.value("M0", std::to_string(p.M0));
    r.value("beta", to_string(p.beta()));
    if (o.m > 0) {
        r.param("m", std::to_string(o.m));
        BigQuantity mq(static_cast<long>(o.m));
        r.value("mdhj*", mdhj_star_bound(k, mq, delta, table).expression());
        if (o.M1 > 0 && !o.beta.empty()) {
            Rational beta = c.rational(o.beta, "beta");
            r.param("M1", std::to_string(o.M1));
            r.value("F", F_of(mq, beta, k, BigQuantity(static_cast<long>(o.M1))).expression());
        }
    }
    if (o.d > 0) {
        r.param("d", std::to_string(o.d));
        auto nr = N_of(k, o.d, delta, table);
        for (auto& [name, q] : nr.chain)
            r.value(name, q.is_exact() ? q.expression() : q.expression() + " ~ " + q.preview());
        r.value("N", nr.value.is_exact() ? nr.value.expression() : nr.value.expression() + " ~ " + nr.value.preview());
    }
    r.outcome = "success";
    return exit_ok;
}

int cmd_verify(Options& o, RunReport& r, std::ostream& out)
{
    r.param("suite", o.suite);
    std::uint64_t seed = o.seed.value_or(1);
    r.param("seed", std::to_string(seed));
    SuiteResult res = run_suite(o.suite, seed);
    for (const auto& t : res.tallies) {
        r.value(t.property, std::to_string(t.passed) + " passed, " + std::to_string(t.failed) + " failed, "
                                + std::to_string(t.skipped) + " skipped");
        if (!o.json)
            out << (t.failed ? "FAIL " : "ok   ") << t.property << ": " << t.passed << " passed, " << t.failed
                << " failed, " << t.skipped << " skipped\n";
    }
    r.outcome = res.ok() ? "passed" : "failed";
    return res.ok() ? exit_ok : exit_failed;
}

void print_text(const RunReport& r, std::ostream& out)
{
    out << "outcome: " << r.outcome;
    if (r.parameters_flag == "toy")
        out << " (toy parameters)";
    out << "\n";
    for (const auto& [name, v] : r.values)
        out << name << " = " << v << "\n";
    for (const auto& w : r.witnesses) {
        out << w.label << ": ";
        if (w.generator) {
            out << *w.generator;
        } else {
            out << "{";
            for (std::size_t j = 0; j < w.words.size(); ++j)
                out << (j ? ", " : "") << w.words[j];
            out << "}";
        }
        out << "\n";
    }
    for (const auto& line : r.certificate)
        out << "checked: " << line << "\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact density Hales-Jewett toolkit", "dhj"};
    app.require_subcommand(1);
    app.fallthrough();

    auto add = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_flag("--json", o.json, "print the JSON report");
        return sub;
    };
    auto kn = [&](CLI::App* s) {
        s->add_option("-k", o.k, "alphabet size")->required();
        s->add_option("-n", o.n, "dimension")->required();
    };
    auto search = [&](CLI::App* s) {
        s->add_option("--budget-nodes", o.budget_nodes, "node cap (0 = none)");
        s->add_option("--jobs", o.jobs, "worker threads");
    };
    auto set = [&](CLI::App* s) { s->add_option("-A", o.sets, "wordset file")->required(); };
    auto proof = [&](CLI::App* s) {
        s->add_option("--delta", o.delta, "density p/q")->required();
        s->add_option("--toy-params", o.toy_params, "parameter override file");
        s->add_option("--oracle-table", o.oracle_table, "oracle table file");
        search(s);
    };

    auto* lines = add("lines", "count (and list) the lines of [k]^n");
    kn(lines);
    lines->add_flag("--list", o.list, "list every line");
    auto* dens = add("density", "exact density of a set");
    set(dens);
    dens->add_option("--subspace", o.subspace, "variable word");
    auto* fl = add("find-line", "first line inside A");
    set(fl);
    search(fl);
    auto* fs = add("find-subspace", "first m-dimensional subspace inside A");
    set(fs);
    fs->add_option("--m", o.m, "dimension")->required();
    fs->add_flag("--restricted", o.restricted, "only the points over [k-1] must lie in A");
    search(fs);
    auto* ml = add("max-linefree", "largest line-free subset of [k]^n");
    kn(ml);
    search(ml);
    auto* dv = add("dhj", "horizon-verified dhj(k, delta)");
    dv->add_option("-k", o.k, "alphabet size")->required();
    dv->add_option("--delta", o.delta, "density p/q")->required();
    dv->add_option("--horizon", o.horizon, "largest n searched")->required();
    search(dv);
    auto* gr = add("gr-search", "subspace with all lines inside or outside a line set");
    kn(gr);
    gr->add_option("--m", o.m, "dimension")->required();
    gr->add_option("--lines", o.lines_file, "file of variable words");
    gr->add_option("--seed", o.seed, "seed for a random line set");
    search(gr);
    auto* un = add("uniformize", "subspace over which all slices stay dense");
    set(un);
    un->add_option("--m", o.m, "dimension")->required();
    un->add_option("--eps", o.eps, "loss p/q")->required();
    auto* ti = add("tile", "tile insensitive sets by disjoint subspaces");
    ti->add_option("-A", o.sets, "wordset file, one per set")->required();
    ti->add_option("--m", o.m, "tile dimension")->required();
    ti->add_option("--i", o.i, "letter i of the (i,k+1) pair for a single set");
    ti->add_option("--beta", o.beta, "beta p/q");
    ti->add_option("--toy-params", o.toy_params, "parameter override file");
    search(ti);
    auto* co = add("correlate", "dense subspace or insensitive correlation");
    set(co);
    co->add_option("--m", o.m, "dimension")->required();
    proof(co);
    auto* di = add("dichotomy", "one line-or-increment step");
    set(di);
    di->add_option("--d", o.d, "target dimension")->required();
    di->add_option("--beta", o.beta, "beta p/q");
    proof(di);
    auto* dr = add("drive", "repeat the dichotomy until a line appears");
    set(dr);
    dr->add_option("--d", o.d, "target dimension")->required();
    dr->add_option("--rounds", o.rounds, "round cap");
    dr->add_option("--beta", o.beta, "beta p/q");
    proof(dr);
    auto* bo = add("bounds", "exact parameter and bound evaluation");
    bo->add_option("-k", o.k, "smaller alphabet size")->required();
    bo->add_option("--delta", o.delta, "density p/q")->required();
    bo->add_option("--oracle-table", o.oracle_table, "oracle table file");
    bo->add_option("--m", o.m, "dimension for mdhj* and F");
    bo->add_option("--d", o.d, "dimension for N");
    bo->add_option("--beta", o.beta, "beta p/q for F");
    bo->add_option("--M1", o.M1, "block dimension for F");
    auto* ve = add("verify", "run a named invariant suite");
    ve->add_option("suite", o.suite, "suite name")->required();
    ve->add_option("--seed", o.seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    RunReport report;
    report.command = chosen->get_name();
    const auto start = std::chrono::steady_clock::now();
    int code = exit_ok;
    try {
        const std::string& name = report.command;
        if (name == "lines")
            code = cmd_lines(o, report);
        else if (name == "density")
            code = cmd_density(o, report);
        else if (name == "find-line")
            code = cmd_find_line(o, report);
        else if (name == "find-subspace")
            code = cmd_find_subspace(o, report);
        else if (name == "max-linefree")
            code = cmd_max_linefree(o, report);
        else if (name == "dhj")
            code = cmd_dhj(o, report);
        else if (name == "gr-search")
            code = cmd_gr_search(o, report);
        else if (name == "uniformize")
            code = cmd_uniformize(o, report);
        else if (name == "tile")
            code = cmd_tile(o, report);
        else if (name == "correlate")
            code = cmd_correlate(o, report);
        else if (name == "dichotomy")
            code = cmd_dichotomy(o, report);
        else if (name == "drive")
            code = cmd_drive(o, report);
        else if (name == "bounds")
            code = cmd_bounds(o, report);
        else if (name == "verify")
            code = cmd_verify(o, report, out);
    } catch (const Negative& neg) {
        report.outcome = neg.outcome;
        code = exit_negative;
    } catch (const MissingOracleValue& e) {
        report.outcome = "undetermined";
        report.value("missing", e.key());
        code = exit_negative;
    } catch (const UndecidableComparison& e) {
        report.outcome = "undetermined";
        report.value("reason", e.what());
        code = exit_negative;
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        err << "internal error: " << e.what() << "\n";
        return exit_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.json)
        out << report.to_json().dump(2) << "\n";
    else if (report.command != "verify")
        print_text(report, out);
    else
        out << "suite " << o.suite << ": " << report.outcome << "\n";
    return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"dhj"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace dhj::cli
