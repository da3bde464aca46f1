#include "supermorph/connection.hpp"

namespace supermorph {

ConnectionData::ConnectionData(std::size_t n) : n_(n), gamma_(n * n * n, Rational(0)) {
    if (n == 0) throw ArgumentError("ambient dimension must be positive");
}

std::size_t ConnectionData::index(std::size_t m, std::size_t i, std::size_t j) const {
    if (m >= n_ || i >= n_ || j >= n_) throw IndexError("Christoffel index out of range");
    return (m * n_ + i) * n_ + j;
}

const Rational& ConnectionData::christoffel(std::size_t m, std::size_t i, std::size_t j) const {
    return gamma_[index(m, i, j)];
}

void ConnectionData::set_christoffel(std::size_t m, std::size_t i, std::size_t j, Rational value) {
    gamma_[index(m, i, j)] = std::move(value);
}

bool ConnectionData::is_flat() const {
    for (const Rational& g : gamma_) {
        if (g != 0) return false;
    }
    return true;
}

Rational hessian_value(const ConnectionData& c, const Vec& at, const Vec& v,
                       const Vec& w, const Polynomial& f) {
    const std::size_t n = c.dimension();
    if (at.size() != n || v.size() != n || w.size() != n || f.dimension() != n) {
        throw DimensionMismatchError("hessian arguments disagree on dimension");
    }
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        const Polynomial di = f.derivative(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (w[j] == 0) continue;
            total += v[i] * w[j] * di.derivative(j).eval(at);
        }
    }
    // covariant correction: (nabla_v w)(f) with both fields constant
    for (std::size_t m = 0; m < n; ++m) {
        Rational coeff = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (v[i] == 0 || w[j] == 0) continue;
                coeff += v[i] * w[j] * c.christoffel(m, i, j);
            }
        }
        if (coeff != 0) total -= coeff * f.derivative(m).eval(at);
    }
    return total;
}

EvenOperator hessian_operator(const ConnectionData& c, const Vec& v, const Vec& w) {
    const std::size_t n = c.dimension();
    if (v.size() != n || w.size() != n) {
        throw DimensionMismatchError("hessian arguments disagree on dimension");
    }
    Vec first(n, Rational(0));
    RatMatrix second(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            second.at(i, j) = v[i] * w[j];
            for (std::size_t m = 0; m < n; ++m) {
                first[m] -= v[i] * w[j] * c.christoffel(m, i, j);
            }
        }
    }
    return EvenOperator(std::move(first), second); // ctor symmetrizes B
}

ExtendedPoint embed_classifying_point(const ConnectionData& c, const ClassifyingPoint& p) {
    p.validate();
    if (p.dimension() != c.dimension()) {
        throw DimensionMismatchError("connection and point disagree on dimension");
    }
    return {p.base_point, p.psi1, p.psi2, -hessian_operator(c, p.psi1, p.psi2)};
}

ExtendedPoint connection_normal_form(const ConnectionData& c, const PullbackData& d) {
    if (d.k != 2) throw UnsupportedKError("connection normal form requires k = 2");
    d.validate();
    if (d.n != c.dimension()) {
        throw DimensionMismatchError("connection and pullback disagree on dimension");
    }
    const EvenOperator e = d.even_op_or_zero(IndexSet::of({0, 1}));
    return {d.base_point, d.odd_vectors[0], d.odd_vectors[1],
            e - hessian_operator(c, d.odd_vectors[0], d.odd_vectors[1])};
}

DiagramCheck check_diagram(const ConnectionData& c, const PullbackData& d, unsigned degree_bound) {
    const ValidityCertificate cert = is_valid_morphism(d);
    if (!cert.valid()) {
        throw ConstraintViolationError("not a morphism: " + cert.describe_failure());
    }
    const ExtendedPoint via_normal_form = connection_normal_form(c, d);
    const ExtendedPoint via_embedding = embed_classifying_point(c, to_classifying_point(d));

    DiagramCheck out;
    out.points_match = via_normal_form.base_point == via_embedding.base_point &&
                       via_normal_form.psi1 == via_embedding.psi1 &&
                       via_normal_form.psi2 == via_embedding.psi2;
    for (const Monomial& m : monomials_up_to(d.n, degree_bound)) {
        const Polynomial f = Polynomial::monomial(m, 1);
        Rational lhs = via_normal_form.f_op.apply(f, d.base_point);
        Rational rhs = via_embedding.f_op.apply(f, d.base_point);
        if (lhs != rhs) out.mismatches.push_back({m, std::move(lhs), std::move(rhs)});
    }
    out.commutes = out.points_match && out.mismatches.empty();
    return out;
}

} // namespace supermorph
