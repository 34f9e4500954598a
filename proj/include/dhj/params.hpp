#pragma once

// Numerical invariants of the density increment argument, as exact rationals.
// Here k is the smaller alphabet: the sets under study live in [k+1]^n.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dhj/rational.hpp"

namespace dhj {

struct ParameterOverrides {
    std::optional<int> m0;
    std::optional<Rational> theta;
    std::optional<Rational> eta;
    std::optional<Rational> gamma;
    std::optional<int> M0;
    std::optional<Rational> beta;
    std::map<int, int> gr;     ///< m -> dimension standing in for GR(k, m)
    std::map<int, int> M1;     ///< m -> block dimension for the tiling at m
    std::map<int, int> F;      ///< m -> dimension standing in for F(m, beta)
    std::map<int, int> block;  ///< m -> block length M for subspace lifting
    std::map<int, int> lift;   ///< m -> uniformization dimension for the restricted lift

    bool empty() const;
    std::vector<std::string> names() const;
};

/// "name [arg] = value" lines: m0, theta, eta, gamma, M0, beta, "gr m = G",
/// "M1 m = v", "F m = v", "block m = M", "lift m = M". '#' starts a comment.
ParameterOverrides parse_overrides(std::istream& in);
ParameterOverrides load_overrides(const std::string& path);

struct ProofParameters {
    int k = 2;
    Rational delta;
    int m0 = 1;
    Rational theta;
    Rational eta;
    Rational gamma;
    Rational lambda;
    int M0 = 1;
    bool toy = false;
    std::vector<std::string> overridden;

    /// theta = (delta/4)/((k+1)^m0 - k^m0), eta = delta theta/48,
    /// gamma = delta eta^2/k, lambda = (k+1)/k, M0 = max(m0, least t with
    /// lambda^t >= 1/eta). Overridden values replace the formula and later
    /// quantities are derived from them; any override marks the set as toy.
    static ProofParameters build(int k, const Rational& delta, int m0, const ParameterOverrides& over = {});

    /// gamma^2 / 4k.
    Rational beta() const;

    /// eta < theta/2 and eta^2/2 >= gamma; both follow from the formulas.
    bool margins_hold() const;

    const char* flag() const { return toy ? "toy" : "paper"; }
};

/// Least t >= 0 with ((k+1)/k)^t >= 1/eta, by exact integer comparison.
int least_lambda_power(int k, const Rational& eta);

struct TilingParameters {
    int k = 2;
    Rational beta;
    int m = 1;
    int M1 = 1;
    Rational Theta;  ///< beta (k+1+m)^(-M1) (k+1)^(m-M1)

    static TilingParameters make(int k, const Rational& beta, int m, int M1);
};

/// Block dimensions and dimension map used by the tiling procedures.
struct TilingPlan {
    int k = 2;
    Rational beta;
    std::map<int, int> M1;
    std::map<int, int> F;
    bool toy = true;

    /// Throws std::out_of_range naming the missing entry.
    TilingParameters at(int m) const;
    int F_of(int m) const;
    /// F^(r)(m) by composing F_of.
    int F_iter(int r, int m) const;
};

} // namespace dhj
