#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "supermorph/errors.hpp"
#include "supermorph/rational.hpp"

namespace supermorph {

/// Exponent vector of a monomial in n commuting coordinates.
class Monomial {
public:
    explicit Monomial(std::vector<unsigned> exponents);
    static Monomial constant(std::size_t n);
    static Monomial coordinate(std::size_t n, std::size_t i);

    std::size_t dimension() const { return exps_.size(); }
    unsigned exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned total_degree() const;

    Monomial times(const Monomial& other) const;

    /// "1" or e.g. "x1^2*x3", for messages and reports.
    std::string describe() const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<unsigned> exps_;
};

/// Graded lexicographic: total degree first, then higher power of the first
/// differing coordinate first (so x1 precedes x2). Fixed once; it drives every
/// deterministic enumeration and serialization order.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Rational in n coordinates, canonical zero-free
/// storage in graded-lex order. Stands in for smooth test functions.
class Polynomial {
public:
    explicit Polynomial(std::size_t n);

    static Polynomial constant(std::size_t n, Rational c);
    static Polynomial coordinate(std::size_t n, std::size_t i);
    static Polynomial monomial(Monomial m, Rational c);

    std::size_t dimension() const { return n_; }
    const std::map<Monomial, Rational, GradedLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; 0 for the zero polynomial.
    unsigned degree() const;

    Rational coefficient(const Monomial& m) const;

    /// Exact evaluation. Throws DimensionMismatchError when dim(point) != n.
    Rational eval(const Vec& point) const;

    /// Exact partial derivative in coordinate i (0-based). Throws IndexError.
    Polynomial derivative(std::size_t i) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);

    bool operator==(const Polynomial&) const = default;

private:
    void add_term(const Monomial& m, const Rational& c);

    std::size_t n_;
    std::map<Monomial, Rational, GradedLexLess> terms_;
};

/// All monomials of total degree <= bound, in graded-lex order.
std::vector<Monomial> monomials_up_to(std::size_t n, unsigned bound);

} // namespace supermorph
