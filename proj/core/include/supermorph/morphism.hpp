#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "supermorph/exact_linalg.hpp"
#include "supermorph/grassmann.hpp"
#include "supermorph/polynomial.hpp"
#include "supermorph/rational.hpp"

namespace supermorph {

/// Derivative of f along a constant vector field, evaluated at a point:
/// sum_i direction_i * (d_i f)(at).
Rational directional_derivative(const Polynomial& f, const Vec& direction, const Vec& at);

/// A linear functional on test functions of differential order at most two,
/// stored structurally: first-order coefficients A and a symmetric
/// second-order matrix B. Applying it to f at a point gives
/// sum_s A_s d_s f + sum_{u,v} B_{uv} d_u d_v f. Only the symmetric part of a
/// second-order coefficient is observable (mixed partials commute), so B is
/// symmetrized on construction.
class EvenOperator {
public:
    explicit EvenOperator(std::size_t n);
    EvenOperator(Vec first_order, RatMatrix second_order);

    std::size_t dimension() const { return first_order_.size(); }
    const Vec& first_order() const { return first_order_; }
    const RatMatrix& second_order() const { return second_order_; }
    bool is_zero() const;

    Rational apply(const Polynomial& f, const Vec& at) const;

    EvenOperator operator-() const;
    friend EvenOperator operator-(const EvenOperator& a, const EvenOperator& b);
    friend EvenOperator operator*(const Rational& c, const EvenOperator& op);

    bool operator==(const EvenOperator&) const = default;

private:
    Vec first_order_;
    RatMatrix second_order_;
};

/// Full coefficient record of a candidate pullback on k odd generators over
/// R^n: base point, one tangent vector per generator, and an even-sector
/// operator per generator subset of size >= 2 (absent = zero). Zero operators
/// are never stored, so structural equality is mathematical equality.
struct PullbackData {
    int k = 0;
    std::size_t n = 0;
    Vec base_point;
    std::vector<Vec> odd_vectors;
    std::map<IndexSet, EvenOperator> even_ops;

    static PullbackData make(int k, std::size_t n, Vec base_point,
                             std::vector<Vec> odd_vectors,
                             std::map<IndexSet, EvenOperator> even_ops = {});

    /// Checks the structural invariants (lengths, subset sizes).
    void validate() const;

    /// Drops stored all-zero even operators.
    void canonicalize();

    EvenOperator even_op_or_zero(IndexSet s) const;

    /// The pullback of f: f(phi) + sum_i psi_i(f) theta_i + sum_S E_S(f) theta_S.
    GrassmannElement apply(const Polynomial& f) const;

    bool operator==(const PullbackData&) const = default;
};

/// One failed coefficient comparison of pullback(f*g) against
/// pullback(f)*pullback(g): lhs is the theta_sector coefficient of the former,
/// rhs of the latter.
struct Violation {
    Monomial f;
    Monomial g;
    IndexSet sector;
    Rational lhs;
    Rational rhs;
};

struct ViolationReport {
    std::vector<Violation> violations;
    bool empty() const { return violations.empty(); }
};

/// Brute-force multiplicativity check over every ordered pair of monomials
/// with both degrees <= degree_bound, in graded-lex order; all 2^k
/// theta-sectors are compared via the full Grassmann product. Returns every
/// mismatch. Throws ArgumentError when degree_bound < 1.
ViolationReport check_homomorphism(const PullbackData& d, unsigned degree_bound);

/// For a two-element generator subset {i, j}:
///   E_S(fg) - f(phi) E_S(g) - g(phi) E_S(f) - (psi_i(f) psi_j(g) - psi_j(f) psi_i(g)),
/// everything evaluated at the base point. Zero for every (f, g) exactly when
/// the theta_{ij} sector of the product condition holds. Throws ArgumentError
/// unless |S| = 2.
Rational key_identity_residual(const PullbackData& d, const Polynomial& f,
                               const Polynomial& g, IndexSet pair);

struct ValidityCertificate {
    bool psis_dependent = false;
    bool even_ops_zero = false;

    bool valid() const { return psis_dependent && even_ops_zero; }
    std::string describe_failure() const;
};

/// k = 2 validity: the odd vectors span at most a line AND all even-operator
/// data vanishes identically. Note the second condition is structural: a pure
/// first-order even operator acts as a derivation and is invisible to the
/// bilinear product check at the base point, yet still invalid. Throws
/// UnsupportedKError when k != 2.
ValidityCertificate is_valid_morphism(const PullbackData& d);

/// A point of the classifying space: base point plus a dependent pair of
/// tangent vectors. The wedge of a constrained pair is identically zero, so
/// the pair itself is the faithful datum and is what gets stored; the fiber
/// coordinates are odd, recorded by the parity tag.
struct ClassifyingPoint {
    Vec base_point;
    Vec psi1;
    Vec psi2;

    static constexpr std::string_view parity_tag = "odd";

    std::size_t dimension() const { return base_point.size(); }
    /// Throws ConstraintViolationError naming the first nonvanishing minor.
    void validate() const;

    bool operator==(const ClassifyingPoint&) const = default;
};

/// Forward direction of the parameterization: project a valid pullback to its
/// classifying point. Throws ConstraintViolationError naming the failed
/// validity condition.
ClassifyingPoint to_classifying_point(const PullbackData& d);

/// Inverse direction: rebuild the pullback with k = 2 and zero even sector.
/// The result passes check_homomorphism at every degree bound.
PullbackData from_classifying_point(const ClassifyingPoint& c);

} // namespace supermorph
