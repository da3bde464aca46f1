#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "supermorph/exact_linalg.hpp"
#include "supermorph/rational.hpp"
#include "supermorph/sampling.hpp"

namespace supermorph {

/// Element of the second exterior power of R^n: zero-free map from ordered
/// index pairs (i < j, 0-based) to the e_i ^ e_j component.
class Bivector {
public:
    explicit Bivector(std::size_t n) : n_(n) {}

    std::size_t dimension() const { return n_; }
    const std::map<std::pair<std::size_t, std::size_t>, Rational>& components() const {
        return comps_;
    }
    Rational component(std::size_t i, std::size_t j) const;
    bool is_zero() const { return comps_.empty(); }

    Bivector& operator+=(const Bivector& other);
    friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
    friend Bivector operator*(const Rational& c, const Bivector& b);

    bool operator==(const Bivector&) const = default;

private:
    friend Bivector wedge(const Vec& v, const Vec& w);
    void add_component(std::size_t i, std::size_t j, const Rational& c);

    std::size_t n_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> comps_;
};

/// v ^ w, component (i,j) = v_i w_j - v_j w_i.
Bivector wedge(const Vec& v, const Vec& w);

/// Exact rank of the 2 x n matrix with rows v, w.
int pair_rank(const Vec& v, const Vec& w);

/// True iff every 2x2 minor of (v, w) vanishes; decided from the minors
/// directly, independently of the rank routine.
bool fiber_membership(const Vec& v, const Vec& w);

/// A pair of tangent vectors with vanishing wedge (the fiber of the
/// classifying bundle over a base point).
struct FiberPoint {
    Vec psi1;
    Vec psi2;

    std::size_t dimension() const { return psi1.size(); }
    /// Throws ConstraintViolationError (naming a minor) when a minor is nonzero.
    void validate() const;
};

enum class FiberComponent { origin, A, B };

struct ComponentLabel {
    FiberComponent component;
    /// ratio witness psi2 = lambda * psi1 on component B
    std::optional<Rational> lambda;
};

/// Partition of the fiber: origin (both zero), A (psi1 = 0, psi2 != 0),
/// B (psi1 != 0, psi2 a multiple of psi1, with the multiple as witness).
ComponentLabel component_of(const FiberPoint& p);

/// Jacobian of all 2x2-minor equations at (psi1, psi2): one row per pair
/// (i < j), columns ordered psi1_1..psi1_n, psi2_1..psi2_n.
RatMatrix minor_jacobian(const Vec& psi1, const Vec& psi2);

/// 2n minus the exact rank of the minor Jacobian: the dimension of the
/// linearized solution space at the point. Equals n + 1 away from the origin,
/// 2n at the origin.
std::size_t local_fiber_dimension(const FiberPoint& p);

struct ReducedDimension {
    unsigned value;
    /// n = 1 is computed from first principles (the fiber is the whole plane,
    /// so the value is n + 2); flagged because the generic count assumes n >= 2.
    bool degenerate;
};

/// Dimension of the total classifying space: n + (n + 1) for n >= 2.
ReducedDimension reduced_dimension(std::size_t n);

/// Deterministic smooth-locus sample: component A draws psi2 != 0, component
/// B draws psi1 != 0 and a scaling; origin returns (0, 0).
FiberPoint sample_fiber_point(std::size_t n, FiberComponent which, Rng& rng);

} // namespace supermorph
