#pragma once

// Dense subsets of [k]^n with exact densities.

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dhj/cube.hpp"
#include "dhj/rational.hpp"

namespace dhj {

using Density = Rational;

class PointSet {
public:
    PointSet(int k, int n);

    static PointSet full(int k, int n);
    static PointSet from_indices(int k, int n, const std::vector<Index>& indices);
    static PointSet from_words(int k, int n, const std::vector<Word>& words);

    int k() const { return k_; }
    int n() const { return n_; }
    Index universe() const { return universe_; }
    Index count() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Index i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
    bool contains(const Word& w) const;

    void insert(Index i);
    void erase(Index i);

    /// All members lie in the set (a subspace's points, for instance).
    bool contains_all(const std::vector<Index>& indices) const;

    PointSet complement() const;
    PointSet& operator|=(const PointSet& other);
    PointSet& operator&=(const PointSet& other);
    PointSet& operator-=(const PointSet& other);

    bool subset_of(const PointSet& other) const;

    std::vector<Index> members() const;

    template <class F>
    void for_each(F&& fn) const
    {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word) {
                int b = std::countr_zero(word);
                fn(static_cast<Index>(w * 64 + b));
                word &= word - 1;
            }
        }
    }

    /// Number of members in the index range [begin, end).
    Index count_range(Index begin, Index end) const;

    friend bool operator==(const PointSet& a, const PointSet& b)
    {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void check_same_ambient(const PointSet& other) const;
    void trim();

    int k_;
    int n_;
    Index universe_;
    Index count_ = 0;
    std::vector<std::uint64_t> bits_;
};

PointSet operator|(PointSet a, const PointSet& b);
PointSet operator&(PointSet a, const PointSet& b);
PointSet operator-(PointSet a, const PointSet& b);

/// |A| / k^n.
Density density(const PointSet& a);

/// |A ∩ V| / k^m.
Density density_in(const PointSet& a, const Subspace& v);

/// Points of V as a set of the ambient cube.
PointSet subspace_points(const Subspace& v);

/// V↾k': instantiations with letters from [k'] only.
PointSet restrict(const Subspace& v, int letters);

/// A_x = { y in [k]^(n-l) : x⌢y in A } for a prefix x of length l < n.
PointSet slice(const PointSet& a, const Word& x);
PointSet slice(const PointSet& a, int prefix_length, Index prefix_index);

/// { w in [k]^m : embed(V, w) in A }: A ∩ V read in the model cube of V.
PointSet pullback(const PointSet& a, const Subspace& v);

/// Image of a model-cube set under embed(V, ·), as a set of the ambient cube.
PointSet pushforward(const PointSet& model, const Subspace& v);

/// Uniform-density semantics: |A| >= delta * k^n.
bool has_density_at_least(const PointSet& a, const Density& delta);

// Wordset v1 text format: a "k=<k> n=<n>" header then one word per line in
// index order; '#' comments and blank lines are ignored on read.
PointSet read_wordset(std::istream& in);
void write_wordset(std::ostream& out, const PointSet& a);
PointSet load_wordset(const std::string& path);
void save_wordset(const std::string& path, const PointSet& a);

} // namespace dhj
