#pragma once

// Partial tables of the threshold numbers dhj, mdhj, mdhj* and gr, keyed by
// exact rationals. Missing keys raise MissingOracleValue; nothing is guessed.

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include "dhj/big_quantity.hpp"
#include "dhj/rational.hpp"

namespace dhj {

class MissingOracleValue : public std::runtime_error {
public:
    explicit MissingOracleValue(std::string key)
      : std::runtime_error("missing oracle value " + key), key_(std::move(key))
    {
    }
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

std::string dhj_key(int k, const Rational& delta);
std::string mdhj_key(int k, const BigQuantity& m, const Rational& delta);
std::string mdhj_star_key(int k, const BigQuantity& m, const Rational& delta);
std::string gr_key(int k, const BigQuantity& m);

class OracleTable {
public:
    void set_dhj(int k, const Rational& delta, const BigInt& value);
    void set_mdhj(int k, int m, const Rational& delta, const BigInt& value);
    void set_mdhj_star(int k, int m, const Rational& delta, const BigInt& value);
    void set_gr(int k, int m, const BigInt& value);

    /// Value used for every delta not listed explicitly ("dhj k * = v").
    void set_dhj_default(int k, const BigInt& value);
    /// Stub rule for gr(k, ·), e.g. m -> m. Only settable through the API.
    void set_gr_rule(int k, std::function<BigQuantity(const BigQuantity&)> rule);

    std::optional<BigInt> dhj(int k, const Rational& delta) const;
    std::optional<BigInt> mdhj(int k, int m, const Rational& delta) const;
    std::optional<BigInt> mdhj_star(int k, int m, const Rational& delta) const;
    std::optional<BigQuantity> gr(int k, const BigQuantity& m) const;

    /// dhj(k, ·) is the same constant for every delta: a default value and
    /// no explicit entries.
    std::optional<BigInt> dhj_constant(int k) const;

    BigInt require_dhj(int k, const Rational& delta) const;

    bool empty() const;

    /// "dhj 2 1/4 = 9", "mdhj 2 2 1/2 = 12", "mdhj* 2 1 1/2 = 708588",
    /// "gr 2 3 = 7", "dhj 2 * = 9"; '#' starts a comment.
    static OracleTable parse(std::istream& in);
    static OracleTable load(const std::string& path);

private:
    struct Key {
        int k;
        int m;
        Rational delta;
        bool operator<(const Key& o) const
        {
            if (k != o.k)
                return k < o.k;
            if (m != o.m)
                return m < o.m;
            return cmp(delta, o.delta) < 0;
        }
    };

    std::map<Key, BigInt> dhj_;
    std::map<Key, BigInt> mdhj_;
    std::map<Key, BigInt> mdhj_star_;
    std::map<std::pair<int, int>, BigInt> gr_;
    std::map<int, BigInt> dhj_default_;
    std::map<int, std::function<BigQuantity(const BigQuantity&)>> gr_rule_;
};

} // namespace dhj
