#pragma once

// Exact quantities that may be too large to write down.
//
// A BigQuantity is either materialized (an exact Rational) or symbolic: an
// exact expression over named, materialized operands together with a
// magnitude estimate. The estimate is a power tower
//   T_0(x) = x,  T_{h+1}(x) = 10^T_h(x)
// stored as (height, top). It decides comparisons only when the two sides are
// far apart; otherwise the comparison reports that it cannot decide.

#include <optional>
#include <stdexcept>
#include <string>

#include "dhj/rational.hpp"

namespace dhj {

/// Values with more decimal digits than this stay symbolic. Default 20000.
std::size_t materialize_digit_cap();
void set_materialize_digit_cap(std::size_t digits);

struct Magnitude {
    int height = 0;
    double top = 0.0;
};

class UndecidableComparison : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BigQuantity {
public:
    BigQuantity() = default;
    BigQuantity(const Rational& value);  // NOLINT: implicit on purpose
    BigQuantity(long value) : BigQuantity(Rational(value)) {}

    static BigQuantity symbolic(std::string expression, Magnitude magnitude);

    bool is_exact() const { return exact_.has_value(); }
    const Rational& value() const;
    /// Exact integer value; throws when not exact or not an integer.
    BigInt integer() const;
    bool is_integer() const { return exact_ && exact_->get_den() == 1; }
    /// Known to be an integer (exact, or symbolic and built from integers).
    bool is_integral() const;
    void set_integral(bool integral);

    const Magnitude& magnitude() const { return magnitude_; }

    /// Text used when this quantity appears inside another expression.
    std::string operand() const;
    /// Full exact description: the decimal value or the expression.
    std::string expression() const;
    /// How the quantity was computed, in terms of its operands.
    std::string formula() const;
    void set_formula(std::string formula);
    /// Short human-readable form ("1.23e45", "10^10^7.1", ...).
    std::string preview() const;

    /// Names the quantity; later expressions refer to it by this label.
    BigQuantity& label(std::string name);
    const std::string& label() const { return label_; }

    friend BigQuantity operator*(const BigQuantity& a, const BigQuantity& b);
    friend BigQuantity operator+(const BigQuantity& a, const BigQuantity& b);
    friend BigQuantity operator-(const BigQuantity& a, const BigQuantity& b);
    friend BigQuantity operator/(const BigQuantity& a, const BigQuantity& b);

    /// <0, 0, >0 like strcmp. Throws UndecidableComparison when symbolic
    /// sides are too close to separate.
    friend int compare(const BigQuantity& a, const BigQuantity& b);

private:
    std::optional<Rational> exact_;
    std::string expression_;
    std::string label_;
    Magnitude magnitude_;
    bool integral_ = false;
};

BigQuantity pow(const BigQuantity& base, const BigQuantity& exponent);
BigQuantity ceil(const BigQuantity& x);
BigQuantity max(const BigQuantity& a, const BigQuantity& b);

inline bool operator<(const BigQuantity& a, const BigQuantity& b) { return compare(a, b) < 0; }
inline bool operator>=(const BigQuantity& a, const BigQuantity& b) { return compare(a, b) >= 0; }

Magnitude magnitude_of(const Rational& value);

} // namespace dhj
