#include "supermorph/polynomial.hpp"

#include <algorithm>

namespace supermorph {

Monomial::Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

Monomial Monomial::constant(std::size_t n) {
    return Monomial(std::vector<unsigned>(n, 0));
}

Monomial Monomial::coordinate(std::size_t n, std::size_t i) {
    if (i >= n) throw IndexError("coordinate index out of range");
    std::vector<unsigned> e(n, 0);
    e[i] = 1;
    return Monomial(std::move(e));
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    if (dimension() != other.dimension()) {
        throw DimensionMismatchError("monomial dimensions differ in product");
    }
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

std::string Monomial::describe() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da < db;
    // same degree: the one with more weight on earlier coordinates comes first
    return a.exponents() > b.exponents();
}

Polynomial::Polynomial(std::size_t n) : n_(n) {}

Polynomial Polynomial::constant(std::size_t n, Rational c) {
    Polynomial p(n);
    p.add_term(Monomial::constant(n), c);
    return p;
}

Polynomial Polynomial::coordinate(std::size_t n, std::size_t i) {
    Polynomial p(n);
    p.add_term(Monomial::coordinate(n, i), 1);
    return p;
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
    Polynomial p(m.dimension());
    p.add_term(m, c);
    return p;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::eval(const Vec& point) const {
    if (point.size() != n_) throw DimensionMismatchError("evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < n_; ++i) {
            for (unsigned e = 0; e < m.exponent(i); ++e) term *= point[i];
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::derivative(std::size_t i) const {
    if (i >= n_) throw IndexError("derivative coordinate out of range");
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        const unsigned e = m.exponent(i);
        if (e == 0) continue;
        std::vector<unsigned> exps = m.exponents();
        exps[i] -= 1;
        out.add_term(Monomial(std::move(exps)), c * e);
    }
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.dimension() != n_) throw DimensionMismatchError("monomial dimension differs from polynomial");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (n_ != other.n_) throw DimensionMismatchError("polynomial dimensions differ in addition");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (n_ != other.n_) throw DimensionMismatchError("polynomial dimensions differ in subtraction");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw DimensionMismatchError("polynomial dimensions differ in product");
    Polynomial out(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    Polynomial out(a.n_);
    if (c == 0) return out;
    for (const auto& [m, cm] : a.terms_) out.terms_.emplace(m, c * cm);
    return out;
}

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned bound) {
    std::vector<Monomial> out;
    std::vector<unsigned> current(n, 0);
    // depth-first over exponent vectors with total degree <= bound
    auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos == n) {
            out.emplace_back(current);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        current[pos] = 0;
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

} // namespace supermorph
