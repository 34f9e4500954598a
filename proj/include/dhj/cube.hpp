#pragma once

// Words, variable words and subspaces of the cube [k]^n.
//
// Letters are 1..k. A variable word stores constants as positive values and
// the variable v_j as -j. Words index the cube big-endian in mixed radix k:
//   index(x) = sum_i (x_i - 1) * k^(n-1-i)
// so a prefix/suffix concatenation is plain index arithmetic.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dhj/rational.hpp"

namespace dhj {

using Index = std::uint64_t;

/// Largest cube (in points) any dense structure may span. Defaults to 2^28.
Index max_cube_points();
void set_max_cube_points(Index cap);

/// k^n, throwing std::length_error above max_cube_points().
Index cube_size(int k, int n);

/// k^n without the cap check; throws std::overflow_error past 2^64.
Index checked_power(int k, int n);

void check_alphabet(int k);

class Word {
public:
    Word(int k, std::vector<int> letters);

    static Word from_index(int k, int n, Index index);

    int k() const { return k_; }
    int length() const { return static_cast<int>(letters_.size()); }
    int operator[](int position) const { return letters_[position]; }
    const std::vector<int>& letters() const { return letters_; }

    Index index() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    int k_;
    std::vector<int> letters_;
};

Word concat(const Word& x, const Word& y);

/// x with every occurrence of `from` replaced by `to`.
Word substitute(const Word& x, int from, int to);

class VariableWord {
public:
    /// Requires canonical form: each v_1..v_m occurs, first occurrences in
    /// increasing position order.
    VariableWord(int k, std::vector<int> symbols);

    int k() const { return k_; }
    int dimension() const { return m_; }
    int length() const { return static_cast<int>(symbols_.size()); }
    int operator[](int position) const { return symbols_[position]; }
    const std::vector<int>& symbols() const { return symbols_; }

    static bool is_variable(int symbol) { return symbol < 0; }

    /// Same symbols read over another alphabet (constants must fit).
    VariableWord with_alphabet(int k) const;

    friend bool operator==(const VariableWord&, const VariableWord&) = default;

private:
    int k_;
    int m_;
    std::vector<int> symbols_;
};

/// Lexicographic order with 1 < ... < k < v_1 < ... < v_m.
bool lex_less(const VariableWord& a, const VariableWord& b);

/// Relabels variables so first occurrences are in order. Accepts any symbol
/// sequence where the variables used are -1..-m for some set of labels.
VariableWord canonicalize(int k, std::vector<int> symbols);

Word instantiate(const VariableWord& z, std::span<const int> letters);

/// An m-dimensional subspace of [k]^n given by its canonical generator.
/// A combinatorial line is the m = 1 case.
class Subspace {
public:
    explicit Subspace(VariableWord generator);

    const VariableWord& generator() const { return generator_; }
    int k() const { return generator_.k(); }
    int dimension() const { return generator_.dimension(); }
    int length() const { return generator_.length(); }
    bool is_line() const { return dimension() == 1; }

    /// Index of z(1,...,1).
    Index base() const { return base_; }
    /// Index increment when variable j (0-based) goes from a to a+1.
    Index weight(int j) const { return weights_[j]; }
    const std::vector<Index>& weights() const { return weights_; }

    Index point_index(std::span<const int> letters) const;

    /// Calls fn(index) for every point z(a), a ranging over [letters]^m in
    /// lexicographic order of a. Returns false if fn asked to stop.
    bool for_each_point(int letters, const std::function<bool(Index)>& fn) const;

    /// All points, in order of their model word index.
    std::vector<Index> point_indices(int letters) const;
    std::vector<Index> point_indices() const { return point_indices(k()); }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.generator_ == b.generator_; }

private:
    VariableWord generator_;
    Index base_ = 0;
    std::vector<Index> weights_;
};

using Line = Subspace;

/// The natural isomorphism [k]^m -> V.
Word embed(const Subspace& v, const Word& w);

/// The subspace of [k]^n whose generator is z' read through V; z' is a
/// variable word of length dim(V). Its dimension is dim(z').
Subspace compose(const Subspace& v, const VariableWord& inner);
Subspace compose(const Subspace& v, const Subspace& inner);

/// z = v_1 v_2 ... v_m, the whole cube [k]^m.
Subspace identity_subspace(int k, int m);

Subspace concat(const Word& prefix, const Subspace& v);
Subspace concat(const Subspace& v, const Word& suffix);
Subspace concat(const Subspace& a, const Subspace& b);

/// Visits every canonical m-variable word of length n over [k] in
/// lexicographic order. fn returns false to stop; the call then returns false.
bool for_each_subspace(int k, int n, int m, const std::function<bool(const Subspace&)>& fn);
bool for_each_line(int k, int n, const std::function<bool(const Line&)>& fn);

std::vector<Line> enumerate_lines(int k, int n);
std::vector<Subspace> enumerate_subspaces(int k, int n, int m);

/// (k+1)^n - k^n.
BigInt count_lines(int k, int n);

/// Lines of [k]^n inside V, as images of the lines of [k]^m, in the
/// enumeration order of [k]^m.
std::vector<Line> lines_within(const Subspace& v);

/// Text form: digits with variables a, b, c, ... for k <= 9; otherwise
/// dot-separated tokens with variables v1, v2, ...
std::string to_string(const Word& w);
std::string to_string(const VariableWord& z);
std::string to_string(const Subspace& v);

Word parse_word(int k, std::string_view text);
VariableWord parse_variable_word(int k, std::string_view text);

} // namespace dhj
