#include "dhj/bounds.hpp"

#include <stdexcept>

namespace dhj {

namespace {

void check_delta(const Rational& delta, const char* what)
{
    if (delta <= 0 || delta > 1)
        throw std::invalid_argument(std::string(what) + ": delta must satisfy 0 < delta <= 1, got " + to_string(delta));
}

BigQuantity integer_quantity(const BigInt& v)
{
    return BigQuantity(Rational(v));
}

// Recursion steps beyond this are not unrolled.
constexpr long kMaxUnroll = 1000000;

} // namespace

ProofParameters base_params(int k, const Rational& delta, const OracleTable& table)
{
    check_delta(delta, "base_params");
    BigInt m0 = table.require_dhj(k, delta / 4);
    if (!m0.fits_sint_p())
        throw std::overflow_error("m0 = " + to_string(m0) + " is too large for a dimension");
    return ProofParameters::build(k, delta, static_cast<int>(m0.get_si()));
}

BigQuantity n_of(const BigQuantity& m, const Rational& eps, int k)
{
    check_delta(eps, "n_of");
    if (compare(m, BigQuantity(1L)) < 0)
        throw std::invalid_argument("n_of: m must be >= 1");
    return BigQuantity(Rational(1) / eps) * pow(BigQuantity(long(k + 1)), m) * m;
}

BigQuantity mdhj_bound(int k, const BigQuantity& m, const Rational& delta, const OracleTable& table)
{
    check_delta(delta, "mdhj_bound");
    if (compare(m, BigQuantity(1L)) < 0 || !m.is_integral())
        throw std::invalid_argument("mdhj_bound: m must be a positive integer");
    const bool small = m.is_exact() && m.integer() <= kMaxUnroll;
    if (!small) {
        // With dhj(k, ·) constant the recursion never looks at delta, so it
        // sums to that constant times m.
        if (auto c = table.dhj_constant(k))
            return integer_quantity(*c) * m;
        throw MissingOracleValue(mdhj_key(k, m, delta) + " (recursion too deep to unroll)");
    }
    long levels = m.integer().get_si();
    BigInt total = 0;
    Rational d = delta;
    for (long level = levels; level >= 1; --level) {
        if (auto v = table.mdhj(k, static_cast<int>(level), d))
            return integer_quantity(total + *v);
        if (level == 1)
            return integer_quantity(total + table.require_dhj(k, d));
        BigInt M = table.require_dhj(k, d / 2);
        if (!M.fits_ulong_p() || M.get_ui() > materialize_digit_cap())
            throw MissingOracleValue(mdhj_key(k, BigQuantity(Rational(level - 1)), d) + " (next key too large)");
        total += M;
        d = d / (2 * Rational(pow(BigInt(k + 1), M.get_ui())));
        d.canonicalize();
    }
    throw std::logic_error("unreachable");
}

BigQuantity mdhj_star_bound(int k, const BigQuantity& m, const Rational& delta, const OracleTable& table)
{
    check_delta(delta, "mdhj_star_bound");
    if (m.is_exact() && m.is_integer() && m.integer().fits_sint_p())
        if (auto v = table.mdhj_star(k, static_cast<int>(m.integer().get_si()), delta))
            return integer_quantity(*v);
    BigQuantity M = mdhj_bound(k, m, delta / 2, table);
    return BigQuantity(Rational(2) / delta) * pow(BigQuantity(long(k + 1)), M) * M;
}

BigQuantity F_of(const BigQuantity& m, const Rational& beta, int k, const BigQuantity& M1)
{
    check_delta(beta, "F_of");
    BigQuantity kk(long(k + 1));
    BigQuantity value = BigQuantity(Rational(1) / beta) * pow(BigQuantity(long(k + 1)) + m, M1) *
                        pow(kk, M1 - m) * M1;
    return ceil(value);
}

BigQuantity F_of(const BigQuantity& m, const Rational& beta, int k, const M1Provider& M1)
{
    return F_of(m, beta, k, M1(m));
}

BigQuantity F_iter(int r, const BigQuantity& m, const Rational& beta, int k, const M1Provider& M1)
{
    if (r < 1)
        throw std::invalid_argument("F_iter: r must be >= 1");
    BigQuantity x = m;
    for (int i = 0; i < r; ++i)
        x = F_of(x, beta, k, M1);
    return x;
}

M1Provider table_M1(int k, const Rational& beta, const OracleTable& table)
{
    return [k, beta, &table](const BigQuantity& m) { return mdhj_star_bound(k, m, beta, table); };
}

NReport N_of(int k, int d, const Rational& delta, const OracleTable& table)
{
    if (d < 1)
        throw std::invalid_argument("N_of: d must be >= 1");
    NReport r{BigQuantity(), base_params(k, delta, table), {}};
    const ProofParameters& p = r.params;
    auto record = [&](std::string name, BigQuantity q) {
        q.label(name);
        r.chain.emplace_back(name, q);
        return q;
    };
    record("m0", BigQuantity(long(p.m0)));
    record("theta", BigQuantity(p.theta));
    record("eta", BigQuantity(p.eta));
    record("gamma", BigQuantity(p.gamma));
    record("M0", BigQuantity(long(p.M0)));
    Rational beta = p.beta();
    if (beta != p.gamma * p.gamma / (4 * k))
        throw std::logic_error("internal check failed: beta != gamma^2/4k");
    record("beta", BigQuantity(beta));

    M1Provider m1 = table_M1(k, beta, table);
    BigQuantity x{static_cast<long>(d)};
    for (int level = 1; level <= k; ++level) {
        BigQuantity M1 = record("M1[" + std::to_string(level) + "]", m1(x));
        x = record("F^(" + std::to_string(level) + ")", F_of(x, beta, k, M1));
    }
    BigQuantity md = record("m(d)", max(BigQuantity(long(p.M0)), x));
    auto g = table.gr(k, md);
    if (!g)
        throw MissingOracleValue(gr_key(k, md));
    BigQuantity G = record("GR", *g);
    r.value = record("N", n_of(G, p.eta * p.eta / 2, k));
    return r;
}

} // namespace dhj
