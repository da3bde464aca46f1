#include "supermorph/bivector.hpp"

#include <string>

namespace supermorph {

Rational Bivector::component(std::size_t i, std::size_t j) const {
    auto it = comps_.find({i, j});
    return it == comps_.end() ? Rational(0) : it->second;
}

void Bivector::add_component(std::size_t i, std::size_t j, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = comps_.emplace(std::make_pair(i, j), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) comps_.erase(it);
    }
}

Bivector& Bivector::operator+=(const Bivector& other) {
    if (n_ != other.n_) throw DimensionMismatchError("bivector dimensions differ in addition");
    for (const auto& [ij, c] : other.comps_) add_component(ij.first, ij.second, c);
    return *this;
}

Bivector operator*(const Rational& c, const Bivector& b) {
    Bivector out(b.n_);
    if (c == 0) return out;
    for (const auto& [ij, cb] : b.comps_) out.comps_.emplace(ij, c * cb);
    return out;
}

Bivector wedge(const Vec& v, const Vec& w) {
    if (v.size() != w.size()) throw DimensionMismatchError("vector dimensions differ in wedge");
    Bivector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            out.add_component(i, j, v[i] * w[j] - v[j] * w[i]);
        }
    }
    return out;
}

int pair_rank(const Vec& v, const Vec& w) {
    if (v.size() != w.size()) throw DimensionMismatchError("vector dimensions differ in pair_rank");
    return static_cast<int>(exact_rank(RatMatrix::from_rows({v, w})));
}

bool fiber_membership(const Vec& v, const Vec& w) {
    if (v.size() != w.size()) throw DimensionMismatchError("vector dimensions differ in fiber test");
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] * w[j] - v[j] * w[i] != 0) return false;
        }
    }
    return true;
}

void FiberPoint::validate() const {
    if (psi1.size() != psi2.size()) throw DimensionMismatchError("fiber point vectors differ in length");
    for (std::size_t i = 0; i < psi1.size(); ++i) {
        for (std::size_t j = i + 1; j < psi1.size(); ++j) {
            Rational minor = psi1[i] * psi2[j] - psi1[j] * psi2[i];
            if (minor != 0) {
                throw ConstraintViolationError(
                    "minor (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    ") = " + to_string(minor) + " does not vanish");
            }
        }
    }
}

ComponentLabel component_of(const FiberPoint& p) {
    p.validate();
    const bool z1 = is_zero_vec(p.psi1);
    const bool z2 = is_zero_vec(p.psi2);
    if (z1 && z2) return {FiberComponent::origin, std::nullopt};
    if (z1) return {FiberComponent::A, std::nullopt};
    // psi1 != 0 and all minors vanish, so psi2 = lambda * psi1
    std::size_t pivot = 0;
    while (p.psi1[pivot] == 0) ++pivot;
    return {FiberComponent::B, p.psi2[pivot] / p.psi1[pivot]};
}

RatMatrix minor_jacobian(const Vec& psi1, const Vec& psi2) {
    if (psi1.size() != psi2.size()) throw DimensionMismatchError("vector dimensions differ in Jacobian");
    const std::size_t n = psi1.size();
    const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
    RatMatrix jac(pairs, 2 * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // minor m = psi1_i psi2_j - psi1_j psi2_i
            jac.at(row, i) = psi2[j];
            jac.at(row, j) = -psi2[i];
            jac.at(row, n + j) = psi1[i];
            jac.at(row, n + i) = -psi1[j];
            ++row;
        }
    }
    return jac;
}

std::size_t local_fiber_dimension(const FiberPoint& p) {
    p.validate();
    const std::size_t n = p.dimension();
    return 2 * n - exact_rank(minor_jacobian(p.psi1, p.psi2));
}

ReducedDimension reduced_dimension(std::size_t n) {
    if (n == 0) throw ArgumentError("ambient dimension must be positive");
    if (n == 1) {
        // every pair in a line is dependent: the fiber is all of R^2
        return {static_cast<unsigned>(n + 2), true};
    }
    return {static_cast<unsigned>(2 * n + 1), false};
}

FiberPoint sample_fiber_point(std::size_t n, FiberComponent which, Rng& rng) {
    switch (which) {
    case FiberComponent::origin:
        return {Vec(n, Rational(0)), Vec(n, Rational(0))};
    case FiberComponent::A:
        return {Vec(n, Rational(0)), rng.nonzero_vector(n)};
    case FiberComponent::B: {
        Vec psi1 = rng.nonzero_vector(n);
        Rational lambda = rng.rational();
        Vec psi2;
        psi2.reserve(n);
        for (const Rational& x : psi1) psi2.push_back(lambda * x);
        return {std::move(psi1), std::move(psi2)};
    }
    }
    throw ArgumentError("unknown fiber component");
}

} // namespace supermorph
