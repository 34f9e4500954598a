#pragma once

// Exact arithmetic helpers. Every density and threshold in the library is a
// Rational; no decision path touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dhj {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p". Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt pow(const BigInt& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);

BigInt ceil(const Rational& value);
BigInt floor(const Rational& value);

inline Rational make_rational(std::uint64_t num, std::uint64_t den)
{
    Rational r(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
    r.canonicalize();
    return r;
}

inline BigInt to_big(std::uint64_t v) { return BigInt(std::to_string(v)); }

/// Converts to uint64, throwing std::overflow_error when out of range.
std::uint64_t to_u64(const BigInt& value);

} // namespace dhj
