#pragma once

// Exact evaluation of the bound recursions. k is the smaller alphabet, as in
// ProofParameters.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dhj/big_quantity.hpp"
#include "dhj/oracle_table.hpp"
#include "dhj/params.hpp"

namespace dhj {

/// m0 = dhj(k, delta/4) from the table, then the exact formulas.
ProofParameters base_params(int k, const Rational& delta, const OracleTable& table);

/// n(m, eps) = eps^-1 (k+1)^m m.
BigQuantity n_of(const BigQuantity& m, const Rational& eps, int k);

/// mdhj(k, 1, delta) = dhj(k, delta);
/// mdhj(k, m+1, delta) = M + mdhj(k, m, delta / (2 (k+1)^M)), M = dhj(k, delta/2).
/// Explicit mdhj entries in the table take precedence at every level.
BigQuantity mdhj_bound(int k, const BigQuantity& m, const Rational& delta, const OracleTable& table);

/// (delta/2)^-1 (k+1)^M M with M = mdhj(k, m, delta/2).
BigQuantity mdhj_star_bound(int k, const BigQuantity& m, const Rational& delta, const OracleTable& table);

using M1Provider = std::function<BigQuantity(const BigQuantity& m)>;

/// ceil(beta^-1 (k+1+m)^M1 (k+1)^(M1-m) M1).
BigQuantity F_of(const BigQuantity& m, const Rational& beta, int k, const BigQuantity& M1);
BigQuantity F_of(const BigQuantity& m, const Rational& beta, int k, const M1Provider& M1);

/// r-fold composition of F(·, beta).
BigQuantity F_iter(int r, const BigQuantity& m, const Rational& beta, int k, const M1Provider& M1);

/// M1 = mdhj*(k, m, beta) read from the table recursion.
M1Provider table_M1(int k, const Rational& beta, const OracleTable& table);

struct NReport {
    BigQuantity value;
    ProofParameters params;
    std::vector<std::pair<std::string, BigQuantity>> chain;  ///< audit trail in order
};

/// N(k, d, delta) = n(GR(k, m(d)), eta^2/2), beta = gamma^2/4k,
/// m(d) = max(M0, F^(k)(d, beta)).
NReport N_of(int k, int d, const Rational& delta, const OracleTable& table);

} // namespace dhj
