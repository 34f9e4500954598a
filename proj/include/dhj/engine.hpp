#pragma once

// Executable versions of the constructive steps of the density increment
// argument. Each procedure runs at whatever n it is given and either returns
// a rechecked success or reports the stage at which it could not continue.
//
// Sets under study live in [k+1]^n; ProofParameters::k is the smaller k.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dhj/insensitivity.hpp"
#include "dhj/oracle_table.hpp"
#include "dhj/params.hpp"
#include "dhj/point_set.hpp"
#include "dhj/search.hpp"
#include "dhj/trace.hpp"

namespace dhj {

/// Recheck failure inside a procedure: a bug, never an expected outcome.
class InternalCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

void require(bool condition, const std::string& what);

/// Sub-oracles and dimension sources shared by the procedures.
struct EngineContext {
    SearchBudget budget;
    ParameterOverrides overrides;
    const OracleTable* table = nullptr;

    std::function<SearchResult(const PointSet&)> line_oracle;
    std::function<SearchResult(const PointSet&, int)> restricted_oracle;
    std::function<GrResult(int k, int n, const std::vector<Line>&, int m, GrPreference)> gr_oracle;

    EngineContext();

    /// Suffix length M for the subspace lift at dimension m and density
    /// delta: "block m" override, else dhj(k, delta/2) from the table.
    std::optional<int> lift_block(int k, int m, const Rational& delta) const;
    /// Uniformization dimension for the restricted lift: "lift m" override,
    /// else mdhj(k, m, delta/2) from the table.
    std::optional<int> restricted_dimension(int k, int m, const Rational& delta) const;
    /// GR(k, m): "gr m" override, else the table.
    std::optional<int> gr_dimension(int k, int m) const;
};

// ---------------------------------------------------------------- uniformize

struct UniformizeResult {
    bool success = false;
    int l = 0;
    std::optional<Subspace> V;  ///< m-dimensional subspace of [k]^l
    ProcedureTrace trace{"uniformize"};
};

/// Iterates V_1 = [k]^m, V_{r+1} = x_r ⌢ [k]^m until every x in V_r has
/// dens(A_x) >= dens(A) - eps; x_r is the first point with
/// dens(A_{x_r}) >= dens(A) + r rho, rho = eps/(k^m - 1).
UniformizeResult uniformize(const PointSet& a, int m, const Rational& eps);

// -------------------------------------------------------------------- lifts

struct LiftResult {
    bool success = false;
    std::optional<Subspace> V;
    std::string reason;
    ProcedureTrace trace{"lift"};
};

/// m-dimensional subspace inside A by splitting off a suffix block, voting
/// on a common line in the dense slices, and recursing on the voters.
LiftResult multidim_lift(const PointSet& a, int m, const EngineContext& ctx);

/// m-dimensional V of [k+1]^n with V restricted to [k] inside A.
LiftResult restricted_lift(const PointSet& a, int m, const EngineContext& ctx);

// ------------------------------------------------------------------ lemmas

enum class Outcome { Success, LineFound, Increment, HypothesisNotMet };

std::string to_string(Outcome o);

struct UniformLinesResult {
    Outcome outcome = Outcome::HypothesisNotMet;
    int l = 0;
    std::optional<Subspace> U;  ///< m-dimensional subspace of [k+1]^l
    std::string stage;
    ProcedureTrace trace{"extract_uniform_lines"};
};

UniformLinesResult extract_uniform_lines(const PointSet& a, int m, const ProofParameters& p,
                                         const EngineContext& ctx);

struct LineDichotomyResult {
    Outcome outcome = Outcome::HypothesisNotMet;  ///< Increment or Success (line rich)
    std::optional<Subspace> X;                    ///< Increment
    Rational density;                             ///< dens_X(A) or dens_W(A)
    std::optional<Subspace> W;                    ///< line-rich subspace
    std::string stage;
    ProcedureTrace trace{"line_dichotomy"};
};

LineDichotomyResult line_dichotomy(const PointSet& a, int m, const ProofParameters& p, const EngineContext& ctx,
                                   bool scan_increment = true);

/// First m-dimensional X (lexicographic) with dens_X(A) >= threshold.
std::optional<std::pair<Subspace, Rational>> find_dense_subspace(const PointSet& a, int m,
                                                                 const Rational& threshold);

struct StructuredResult {
    Outcome outcome = Outcome::HypothesisNotMet;
    std::optional<Subspace> W;
    std::optional<Subspace> X;         ///< Increment branch
    std::optional<Line> line;          ///< LineFound branch
    std::vector<PointSet> C_parts;     ///< C_1..C_k in the model cube of W
    std::optional<PointSet> C;
    std::optional<PointSet> A_model;   ///< A pulled back to W
    std::string stage;
    ProcedureTrace trace{"structured_set"};
};

StructuredResult structured_set(const PointSet& a, int m, const ProofParameters& p, const EngineContext& ctx,
                                bool scan_increment = true);

struct CorrelateResult {
    Outcome outcome = Outcome::HypothesisNotMet;  ///< Success, LineFound or HypothesisNotMet
    bool early_branch = false;
    std::optional<Subspace> W;
    std::optional<Line> line;
    std::vector<PointSet> D_parts;  ///< D_1..D_k in the model cube of W
    std::optional<PointSet> D;
    std::optional<PointSet> A_model;
    std::vector<PointSet> P_parts;  ///< partition branch only
    int i0 = 0;
    std::string stage;
    ProcedureTrace trace{"correlate"};
};

CorrelateResult correlate(const PointSet& a, int m, const ProofParameters& p, const EngineContext& ctx);

// ------------------------------------------------------------------ tiling

struct TilingResult {
    bool success = false;
    std::vector<Subspace> family;
    Rational residual;  ///< density of D minus the union of the family
    int rounds = 0;
    std::string stage;
    ProcedureTrace trace{"tile"};
};

/// Covers an (i,k+1)-insensitive D by disjoint m-dimensional subspaces
/// until the uncovered part has density below 2 beta.
TilingResult tile_insensitive(const PointSet& d, int i, const TilingParameters& t, const EngineContext& ctx);

/// Same for D_1 ∩ ... ∩ D_r with D_i (i,k+1)-insensitive; residual < 2 r beta.
TilingResult tile_intersection(const std::vector<PointSet>& parts, int r, int m, const TilingPlan& plan,
                               const EngineContext& ctx);

/// Independent recheck: pairwise disjoint, each inside `inside`, each of
/// dimension m.
bool family_is_valid(const std::vector<Subspace>& family, const PointSet& inside, int m);
PointSet family_union(const std::vector<Subspace>& family, int k, int n);

// --------------------------------------------------------------- dichotomy

struct DichotomyOutcome {
    Outcome outcome = Outcome::HypothesisNotMet;  ///< LineFound, Increment or HypothesisNotMet
    std::optional<Subspace> V;                    ///< line or increment subspace
    Rational density;
    std::string stage;
    ProcedureTrace trace{"dichotomy_step"};
};

/// Dimension m(d) = max(M0, F^(k)(d)) under the plan.
int dichotomy_dimension(int d, const ProofParameters& p, const TilingPlan& plan);

DichotomyOutcome dichotomy_step(const PointSet& a, int d, const ProofParameters& p, const TilingPlan& plan,
                                const EngineContext& ctx);

using ParameterSource = std::function<ProofParameters(const Rational& delta)>;
using PlanSource = std::function<TilingPlan(const ProofParameters& p)>;

struct DriverResult {
    Outcome outcome = Outcome::HypothesisNotMet;  ///< LineFound or HypothesisNotMet
    std::optional<Line> line;                     ///< line of the original cube
    int rounds = 0;
    std::string stage;
    ProcedureTrace trace{"dhj_driver"};
};

/// Repeats the dichotomy step, restricting to the increment subspace each
/// round with parameters rebuilt from the measured density.
DriverResult dhj_driver(const PointSet& a, const Rational& delta, int d, int round_cap,
                        const ParameterSource& params, const PlanSource& plan, const EngineContext& ctx);

} // namespace dhj
