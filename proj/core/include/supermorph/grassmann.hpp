#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "supermorph/errors.hpp"
#include "supermorph/rational.hpp"

namespace supermorph {

/// A subset of the odd generators, stored as a bitmask (bit i = generator i,
/// 0-based). The empty set labels the unit basis element.
class IndexSet {
public:
    constexpr IndexSet() = default;
    static constexpr IndexSet from_bits(std::uint32_t bits) { return IndexSet(bits); }

    /// Builds from 0-based generator indices; duplicates collapse.
    static IndexSet of(std::initializer_list<int> indices);
    static IndexSet single(int i);
    static constexpr IndexSet empty_set() { return IndexSet(0); }
    static constexpr IndexSet full(int k) { return IndexSet((std::uint32_t{1} << k) - 1); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    constexpr bool disjoint_from(IndexSet other) const { return (bits_ & other.bits_) == 0; }
    constexpr IndexSet united(IndexSet other) const { return IndexSet(bits_ | other.bits_); }
    constexpr bool valid_for(int k) const { return bits_ < (std::uint32_t{1} << k); }

    /// Ascending 0-based member indices.
    std::vector<int> members() const;

    /// "{}" or "{1,2}" with 1-based indices, for messages and reports.
    std::string describe() const;

    auto operator<=>(const IndexSet&) const = default;

private:
    explicit constexpr IndexSet(std::uint32_t bits) : bits_(bits) {}
    std::uint32_t bits_ = 0;
};

/// Count of pairs (s, t) with s in `s`, t in `t`, s > t; its parity is the
/// sign of the basis product θ_s · θ_t.
int merge_inversions(IndexSet s, IndexSet t);

/// Element of the Grassmann algebra on k anticommuting generators with
/// Rational coefficients, as a zero-free map basis-subset -> coefficient.
/// Values are immutable in spirit: all operations return new elements, so
/// structural equality is mathematical equality.
class GrassmannElement {
public:
    explicit GrassmannElement(int k);

    static GrassmannElement unit(int k);
    static GrassmannElement basis(int k, IndexSet s, Rational coeff = 1);
    static GrassmannElement generator(int k, int i);

    int generators() const { return k_; }
    const std::map<IndexSet, Rational>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Stored coefficient or zero. Throws IndexError when s is not a valid
    /// subset for this element's generator count.
    Rational coefficient(IndexSet s) const;

    GrassmannElement operator-() const;
    GrassmannElement& operator+=(const GrassmannElement& other);
    GrassmannElement& operator-=(const GrassmannElement& other);
    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
    friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
    friend GrassmannElement operator*(const Rational& c, const GrassmannElement& a);

    bool operator==(const GrassmannElement&) const = default;

private:
    void add_term(IndexSet s, const Rational& c);

    int k_;
    std::map<IndexSet, Rational> coeffs_;
};

} // namespace supermorph
