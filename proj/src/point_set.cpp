#include "dhj/point_set.hpp"

#include <stdexcept>

namespace dhj {

PointSet::PointSet(int k, int n)
  : k_(k), n_(n), universe_(0)
{
    check_alphabet(k);
    if (n < 1)
        throw std::invalid_argument("point set needs n >= 1");
    universe_ = cube_size(k, n);
    bits_.assign((universe_ + 63) / 64, 0);
}

PointSet PointSet::full(int k, int n)
{
    PointSet s(k, n);
    for (auto& w : s.bits_)
        w = ~std::uint64_t{0};
    s.trim();
    s.count_ = s.universe_;
    return s;
}

PointSet PointSet::from_indices(int k, int n, const std::vector<Index>& indices)
{
    PointSet s(k, n);
    for (Index i : indices)
        s.insert(i);
    return s;
}

PointSet PointSet::from_words(int k, int n, const std::vector<Word>& words)
{
    PointSet s(k, n);
    for (const Word& w : words) {
        if (w.k() != k || w.length() != n)
            throw std::invalid_argument("word " + to_string(w) + " outside the ambient cube");
        s.insert(w.index());
    }
    return s;
}

void PointSet::trim()
{
    Index extra = bits_.size() * 64 - universe_;
    if (extra)
        bits_.back() &= (~std::uint64_t{0}) >> extra;
}

bool PointSet::contains(const Word& w) const
{
    if (w.k() != k_ || w.length() != n_)
        throw std::invalid_argument("word outside the ambient cube");
    return contains(w.index());
}

void PointSet::insert(Index i)
{
    if (i >= universe_)
        throw std::out_of_range("point index outside the cube");
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (!(bits_[i >> 6] & mask)) {
        bits_[i >> 6] |= mask;
        ++count_;
    }
}

void PointSet::erase(Index i)
{
    if (i >= universe_)
        throw std::out_of_range("point index outside the cube");
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (bits_[i >> 6] & mask) {
        bits_[i >> 6] &= ~mask;
        --count_;
    }
}

bool PointSet::contains_all(const std::vector<Index>& indices) const
{
    for (Index i : indices)
        if (i >= universe_ || !contains(i))
            return false;
    return true;
}

void PointSet::check_same_ambient(const PointSet& other) const
{
    if (k_ != other.k_ || n_ != other.n_)
        throw std::invalid_argument("point sets live in different cubes");
}

PointSet PointSet::complement() const
{
    PointSet s(*this);
    for (auto& w : s.bits_)
        w = ~w;
    s.trim();
    s.count_ = universe_ - count_;
    return s;
}

namespace {

Index popcount_all(const std::vector<std::uint64_t>& bits)
{
    Index c = 0;
    for (auto w : bits)
        c += static_cast<Index>(std::popcount(w));
    return c;
}

} // namespace

PointSet& PointSet::operator|=(const PointSet& other)
{
    check_same_ambient(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        bits_[i] |= other.bits_[i];
    count_ = popcount_all(bits_);
    return *this;
}

PointSet& PointSet::operator&=(const PointSet& other)
{
    check_same_ambient(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        bits_[i] &= other.bits_[i];
    count_ = popcount_all(bits_);
    return *this;
}

PointSet& PointSet::operator-=(const PointSet& other)
{
    check_same_ambient(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        bits_[i] &= ~other.bits_[i];
    count_ = popcount_all(bits_);
    return *this;
}

bool PointSet::subset_of(const PointSet& other) const
{
    check_same_ambient(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i])
            return false;
    return true;
}

std::vector<Index> PointSet::members() const
{
    std::vector<Index> out;
    out.reserve(count_);
    for_each([&](Index i) { out.push_back(i); });
    return out;
}

Index PointSet::count_range(Index begin, Index end) const
{
    if (end > universe_ || begin > end)
        throw std::out_of_range("count_range outside the cube");
    if (begin == end)
        return 0;
    Index c = 0;
    Index wb = begin >> 6, we = (end - 1) >> 6;
    for (Index w = wb; w <= we; ++w) {
        std::uint64_t word = bits_[w];
        if (w == wb)
            word &= (~std::uint64_t{0}) << (begin & 63);
        if (w == we) {
            unsigned top = static_cast<unsigned>(((end - 1) & 63) + 1);
            if (top < 64)
                word &= (std::uint64_t{1} << top) - 1;
        }
        c += static_cast<Index>(std::popcount(word));
    }
    return c;
}

PointSet operator|(PointSet a, const PointSet& b)
{
    a |= b;
    return a;
}

PointSet operator&(PointSet a, const PointSet& b)
{
    a &= b;
    return a;
}

PointSet operator-(PointSet a, const PointSet& b)
{
    a -= b;
    return a;
}

// ------------------------------------------------------------ densities

Density density(const PointSet& a)
{
    return make_rational(a.count(), a.universe());
}

namespace {

void check_subspace_ambient(const PointSet& a, const Subspace& v)
{
    if (a.k() != v.k() || a.n() != v.length())
        throw std::invalid_argument("subspace " + to_string(v) + " does not live in the cube of the set");
}

} // namespace

Density density_in(const PointSet& a, const Subspace& v)
{
    check_subspace_ambient(a, v);
    Index hits = 0, total = 0;
    v.for_each_point(v.k(), [&](Index i) {
        hits += a.contains(i) ? 1 : 0;
        ++total;
        return true;
    });
    return make_rational(hits, total);
}

PointSet subspace_points(const Subspace& v)
{
    PointSet s(v.k(), v.length());
    v.for_each_point(v.k(), [&](Index i) {
        s.insert(i);
        return true;
    });
    return s;
}

PointSet restrict(const Subspace& v, int letters)
{
    if (letters < 2 || letters > v.k())
        throw std::invalid_argument("restrict: k' must satisfy 2 <= k' <= k");
    PointSet s(v.k(), v.length());
    v.for_each_point(letters, [&](Index i) {
        s.insert(i);
        return true;
    });
    return s;
}

PointSet slice(const PointSet& a, int prefix_length, Index prefix_index)
{
    if (prefix_length < 1 || prefix_length >= a.n())
        throw std::invalid_argument("slice: prefix length must satisfy 1 <= l < n");
    const int rest = a.n() - prefix_length;
    const Index block = checked_power(a.k(), rest);
    if (prefix_index >= checked_power(a.k(), prefix_length))
        throw std::out_of_range("slice: prefix index outside the cube");
    PointSet s(a.k(), rest);
    const Index offset = prefix_index * block;
    for (Index y = 0; y < block; ++y)
        if (a.contains(offset + y))
            s.insert(y);
    return s;
}

PointSet slice(const PointSet& a, const Word& x)
{
    if (x.k() != a.k())
        throw std::invalid_argument("slice: alphabet mismatch");
    return slice(a, x.length(), x.index());
}

PointSet pullback(const PointSet& a, const Subspace& v)
{
    check_subspace_ambient(a, v);
    PointSet s(v.k(), v.dimension());
    Index model = 0;
    v.for_each_point(v.k(), [&](Index i) {
        if (a.contains(i))
            s.insert(model);
        ++model;
        return true;
    });
    return s;
}

PointSet pushforward(const PointSet& model, const Subspace& v)
{
    if (model.k() != v.k() || model.n() != v.dimension())
        throw std::invalid_argument("pushforward: model set does not match the subspace");
    PointSet s(v.k(), v.length());
    Index idx = 0;
    v.for_each_point(v.k(), [&](Index i) {
        if (model.contains(idx))
            s.insert(i);
        ++idx;
        return true;
    });
    return s;
}

bool has_density_at_least(const PointSet& a, const Density& delta)
{
    return density(a) >= delta;
}

} // namespace dhj
