#include "supermorph/morphism.hpp"

#include "supermorph/bivector.hpp"

namespace supermorph {

Rational directional_derivative(const Polynomial& f, const Vec& direction, const Vec& at) {
    if (direction.size() != f.dimension() || at.size() != f.dimension()) {
        throw DimensionMismatchError("direction/point dimension differs from polynomial");
    }
    Rational total = 0;
    for (std::size_t i = 0; i < direction.size(); ++i) {
        if (direction[i] == 0) continue;
        total += direction[i] * f.derivative(i).eval(at);
    }
    return total;
}

EvenOperator::EvenOperator(std::size_t n)
    : first_order_(n, Rational(0)), second_order_(n, n) {}

EvenOperator::EvenOperator(Vec first_order, RatMatrix second_order)
    : first_order_(std::move(first_order)),
      second_order_(second_order.rows(), second_order.cols()) {
    const std::size_t n = first_order_.size();
    if (second_order.rows() != n || second_order.cols() != n) {
        throw DimensionMismatchError("second-order matrix shape differs from first-order length");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            second_order_.at(i, j) = (second_order.at(i, j) + second_order.at(j, i)) / 2;
        }
    }
}

bool EvenOperator::is_zero() const {
    if (!is_zero_vec(first_order_)) return false;
    for (std::size_t i = 0; i < dimension(); ++i) {
        for (std::size_t j = 0; j < dimension(); ++j) {
            if (second_order_.at(i, j) != 0) return false;
        }
    }
    return true;
}

Rational EvenOperator::apply(const Polynomial& f, const Vec& at) const {
    const std::size_t n = dimension();
    if (f.dimension() != n || at.size() != n) {
        throw DimensionMismatchError("operator dimension differs from polynomial/point");
    }
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (first_order_[i] != 0) total += first_order_[i] * f.derivative(i).eval(at);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial di = f.derivative(i);
        if (di.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (second_order_.at(i, j) == 0) continue;
            total += second_order_.at(i, j) * di.derivative(j).eval(at);
        }
    }
    return total;
}

EvenOperator EvenOperator::operator-() const {
    return Rational(-1) * *this;
}

EvenOperator operator-(const EvenOperator& a, const EvenOperator& b) {
    const std::size_t n = a.dimension();
    if (b.dimension() != n) throw DimensionMismatchError("operator dimensions differ");
    Vec first(n);
    RatMatrix second(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        first[i] = a.first_order_[i] - b.first_order_[i];
        for (std::size_t j = 0; j < n; ++j) {
            second.at(i, j) = a.second_order_.at(i, j) - b.second_order_.at(i, j);
        }
    }
    return EvenOperator(std::move(first), second);
}

EvenOperator operator*(const Rational& c, const EvenOperator& op) {
    const std::size_t n = op.dimension();
    Vec first(n);
    RatMatrix second(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        first[i] = c * op.first_order_[i];
        for (std::size_t j = 0; j < n; ++j) {
            second.at(i, j) = c * op.second_order_.at(i, j);
        }
    }
    return EvenOperator(std::move(first), second);
}

PullbackData PullbackData::make(int k, std::size_t n, Vec base_point,
                                std::vector<Vec> odd_vectors,
                                std::map<IndexSet, EvenOperator> even_ops) {
    PullbackData d{k, n, std::move(base_point), std::move(odd_vectors), std::move(even_ops)};
    d.validate();
    d.canonicalize();
    return d;
}

void PullbackData::validate() const {
    if (k < 0 || k > 30) throw ArgumentError("generator count must be in [0, 30]");
    if (base_point.size() != n) throw DimensionMismatchError("base point length differs from n");
    if (odd_vectors.size() != static_cast<std::size_t>(k)) {
        throw DimensionMismatchError("odd vector count differs from k");
    }
    for (const Vec& psi : odd_vectors) {
        if (psi.size() != n) throw DimensionMismatchError("odd vector length differs from n");
    }
    for (const auto& [s, op] : even_ops) {
        if (!s.valid_for(k)) throw IndexError("even-sector subset exceeds generator count");
        if (s.size() < 2) throw ArgumentError("even-sector subsets must have at least two members");
        if (op.dimension() != n) throw DimensionMismatchError("even operator dimension differs from n");
    }
}

void PullbackData::canonicalize() {
    for (auto it = even_ops.begin(); it != even_ops.end();) {
        if (it->second.is_zero()) {
            it = even_ops.erase(it);
        } else {
            ++it;
        }
    }
}

EvenOperator PullbackData::even_op_or_zero(IndexSet s) const {
    auto it = even_ops.find(s);
    return it == even_ops.end() ? EvenOperator(n) : it->second;
}

GrassmannElement PullbackData::apply(const Polynomial& f) const {
    if (f.dimension() != n) throw DimensionMismatchError("polynomial dimension differs from n");
    GrassmannElement out = f.eval(base_point) * GrassmannElement::unit(k);
    for (int i = 0; i < k; ++i) {
        Rational c = directional_derivative(f, odd_vectors[i], base_point);
        out += c * GrassmannElement::generator(k, i);
    }
    for (const auto& [s, op] : even_ops) {
        out += op.apply(f, base_point) * GrassmannElement::basis(k, s);
    }
    return out;
}

ViolationReport check_homomorphism(const PullbackData& d, unsigned degree_bound) {
    if (degree_bound < 1) throw ArgumentError("degree bound must be at least 1");
    d.validate();
    ViolationReport report;
    const std::vector<Monomial> monos = monomials_up_to(d.n, degree_bound);
    for (const Monomial& mf : monos) {
        const Polynomial f = Polynomial::monomial(mf, 1);
        const GrassmannElement pf = d.apply(f);
        for (const Monomial& mg : monos) {
            const Polynomial g = Polynomial::monomial(mg, 1);
            const GrassmannElement lhs = d.apply(f * g);
            const GrassmannElement rhs = pf * d.apply(g);
            if (lhs == rhs) continue;
            for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << d.k); ++bits) {
                const IndexSet s = IndexSet::from_bits(bits);
                Rational cl = lhs.coefficient(s);
                Rational cr = rhs.coefficient(s);
                if (cl != cr) {
                    report.violations.push_back({mf, mg, s, std::move(cl), std::move(cr)});
                }
            }
        }
    }
    return report;
}

Rational key_identity_residual(const PullbackData& d, const Polynomial& f,
                               const Polynomial& g, IndexSet pair) {
    if (pair.size() != 2) throw ArgumentError("key identity needs a two-element generator subset");
    if (!pair.valid_for(d.k)) throw IndexError("subset " + pair.describe() + " exceeds generator count");
    if (f.dimension() != d.n || g.dimension() != d.n) {
        throw DimensionMismatchError("polynomial dimension differs from n");
    }
    const auto members = pair.members();
    const Vec& psi_i = d.odd_vectors[members[0]];
    const Vec& psi_j = d.odd_vectors[members[1]];
    const EvenOperator e = d.even_op_or_zero(pair);
    const Vec& phi = d.base_point;

    Rational bracket = directional_derivative(f, psi_i, phi) * directional_derivative(g, psi_j, phi) -
                       directional_derivative(f, psi_j, phi) * directional_derivative(g, psi_i, phi);
    return e.apply(f * g, phi) - f.eval(phi) * e.apply(g, phi) - g.eval(phi) * e.apply(f, phi) -
           bracket;
}

std::string ValidityCertificate::describe_failure() const {
    if (valid()) return "";
    std::string out;
    if (!psis_dependent) out += "odd vectors are linearly independent";
    if (!even_ops_zero) {
        if (!out.empty()) out += "; ";
        out += "even-sector operator data is nonzero";
    }
    return out;
}

ValidityCertificate is_valid_morphism(const PullbackData& d) {
    if (d.k != 2) throw UnsupportedKError("validity conditions are stated for k = 2 only");
    d.validate();
    ValidityCertificate cert;
    cert.psis_dependent = wedge(d.odd_vectors[0], d.odd_vectors[1]).is_zero();
    cert.even_ops_zero = true;
    for (const auto& [s, op] : d.even_ops) {
        if (!op.is_zero()) cert.even_ops_zero = false;
    }
    return cert;
}

void ClassifyingPoint::validate() const {
    if (psi1.size() != base_point.size() || psi2.size() != base_point.size()) {
        throw DimensionMismatchError("classifying point vectors differ in length");
    }
    FiberPoint{psi1, psi2}.validate();
}

ClassifyingPoint to_classifying_point(const PullbackData& d) {
    const ValidityCertificate cert = is_valid_morphism(d);
    if (!cert.valid()) {
        throw ConstraintViolationError("not a morphism: " + cert.describe_failure());
    }
    return {d.base_point, d.odd_vectors[0], d.odd_vectors[1]};
}

PullbackData from_classifying_point(const ClassifyingPoint& c) {
    c.validate();
    return PullbackData::make(2, c.dimension(), c.base_point, {c.psi1, c.psi2});
}

} // namespace supermorph
