#pragma once

#include <cstddef>
#include <vector>

#include "supermorph/morphism.hpp"
#include "supermorph/polynomial.hpp"
#include "supermorph/rational.hpp"

namespace supermorph {

/// Constant Christoffel symbols on a single chart of R^n: gamma(m, i, j) is
/// the upper-m, lower-(i,j) coefficient. All zeros is the flat connection.
/// No symmetry in (i, j) is assumed (torsion is allowed).
class ConnectionData {
public:
    explicit ConnectionData(std::size_t n);
    static ConnectionData flat(std::size_t n) { return ConnectionData(n); }

    std::size_t dimension() const { return n_; }
    const Rational& christoffel(std::size_t m, std::size_t i, std::size_t j) const;
    void set_christoffel(std::size_t m, std::size_t i, std::size_t j, Rational value);
    bool is_flat() const;

    bool operator==(const ConnectionData&) const = default;

private:
    std::size_t index(std::size_t m, std::size_t i, std::size_t j) const;
    std::size_t n_;
    std::vector<Rational> gamma_; // n^3, row-major (m, i, j)
};

/// Hessian of f relative to the connection, with both arguments extended off
/// the base point as constant vector fields:
///   sum_{i,j} v_i w_j d_i d_j f(at)  -  sum_{i,j,m} v_i w_j Gamma^m_{ij} d_m f(at).
Rational hessian_value(const ConnectionData& c, const Vec& at, const Vec& v,
                       const Vec& w, const Polynomial& f);

/// The same Hessian packaged as reusable operator data: B = sym(v w^T),
/// A_m = -sum_{ij} v_i w_j Gamma^m_{ij}. Applying the result at any point
/// reproduces hessian_value there (constant symbols carry no point
/// dependence).
EvenOperator hessian_operator(const ConnectionData& c, const Vec& v, const Vec& w);

/// A point of the enlarged (unconstrained) parameter space: base point, two
/// tangent vectors, and a free even functional.
struct ExtendedPoint {
    Vec base_point;
    Vec psi1;
    Vec psi2;
    EvenOperator f_op;

    bool operator==(const ExtendedPoint&) const = default;
};

/// Embeds a classifying point into the enlarged space with fourth component
/// minus the connection Hessian of its vector pair. Throws
/// ConstraintViolationError when the point's minors do not vanish.
ExtendedPoint embed_classifying_point(const ConnectionData& c, const ClassifyingPoint& p);

/// Connection normal form of arbitrary pullback data (valid or not):
/// fourth component F = E_{12} - Hess(psi1, psi2).
ExtendedPoint connection_normal_form(const ConnectionData& c, const PullbackData& d);

struct DiagramCheck {
    struct Mismatch {
        Monomial monomial;
        Rational lhs;
        Rational rhs;
    };

    bool commutes = false;
    bool points_match = false;
    std::vector<Mismatch> mismatches;
};

/// Compares the two routes around the square for a valid k = 2 pullback:
/// normal form of d versus embedding of its classifying point. The two F
/// operators are compared by applying both to every monomial of degree
/// <= degree_bound at the base point (independent evaluation paths). Throws
/// ConstraintViolationError when d is not a valid morphism.
DiagramCheck check_diagram(const ConnectionData& c, const PullbackData& d, unsigned degree_bound);

} // namespace supermorph
