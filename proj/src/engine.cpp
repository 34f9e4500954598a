#include "dhj/engine.hpp"

#include "dhj/bounds.hpp"

namespace dhj {

void require(bool condition, const std::string& what)
{
    if (!condition)
        throw InternalCheckFailure("internal check failed: " + what);
}

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Success:
        return "success";
    case Outcome::LineFound:
        return "line-found";
    case Outcome::Increment:
        return "increment";
    case Outcome::HypothesisNotMet:
        return "hypothesis-not-met";
    }
    return "?";
}

EngineContext::EngineContext()
{
    line_oracle = [this](const PointSet& a) { return find_line(a, budget); };
    restricted_oracle = [this](const PointSet& a, int m) { return find_restricted_subspace(a, m, budget); };
    gr_oracle = [this](int k, int n, const std::vector<Line>& lines, int m, GrPreference pref) {
        return gr_partition_search(k, n, lines, m, pref, budget);
    };
}

namespace {

std::optional<int> small_int(const BigQuantity& q)
{
    if (!q.is_exact() || !q.is_integer())
        return std::nullopt;
    BigInt v = q.integer();
    if (!v.fits_sint_p() || v < 0)
        return std::nullopt;
    return static_cast<int>(v.get_si());
}

} // namespace

std::optional<int> EngineContext::lift_block(int k, int m, const Rational& delta) const
{
    if (auto it = overrides.block.find(m); it != overrides.block.end())
        return it->second;
    if (!table)
        return std::nullopt;
    Rational half = delta / 2;
    half.canonicalize();
    if (auto v = table->dhj(k, half))
        return small_int(BigQuantity(Rational(*v)));
    return std::nullopt;
}

std::optional<int> EngineContext::restricted_dimension(int k, int m, const Rational& delta) const
{
    if (auto it = overrides.lift.find(m); it != overrides.lift.end())
        return it->second;
    if (!table)
        return std::nullopt;
    Rational half = delta / 2;
    half.canonicalize();
    try {
        return small_int(mdhj_bound(k, BigQuantity(Rational(m)), half, *table));
    } catch (const MissingOracleValue&) {
        return std::nullopt;
    }
}

std::optional<int> EngineContext::gr_dimension(int k, int m) const
{
    if (auto it = overrides.gr.find(m); it != overrides.gr.end())
        return it->second;
    if (!table)
        return std::nullopt;
    if (auto v = table->gr(k, BigQuantity(Rational(m))))
        return small_int(*v);
    return std::nullopt;
}

} // namespace dhj
