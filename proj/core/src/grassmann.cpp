#include "supermorph/grassmann.hpp"

namespace supermorph {

IndexSet IndexSet::of(std::initializer_list<int> indices) {
    std::uint32_t bits = 0;
    for (int i : indices) {
        if (i < 0 || i >= 32) throw IndexError("generator index out of range");
        bits |= std::uint32_t{1} << i;
    }
    return IndexSet(bits);
}

IndexSet IndexSet::single(int i) {
    return IndexSet::of({i});
}

std::vector<int> IndexSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::string IndexSet::describe() const {
    std::string out = "{";
    bool first = true;
    for (int i : members()) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

int merge_inversions(IndexSet s, IndexSet t) {
    int count = 0;
    for (int i : t.members()) {
        // generators of s strictly above t's member i
        count += std::popcount(s.bits() >> (i + 1));
    }
    return count;
}

GrassmannElement::GrassmannElement(int k) : k_(k) {
    if (k < 0 || k > 30) throw ArgumentError("generator count must be in [0, 30]");
}

GrassmannElement GrassmannElement::unit(int k) {
    return basis(k, IndexSet::empty_set());
}

GrassmannElement GrassmannElement::basis(int k, IndexSet s, Rational coeff) {
    GrassmannElement e(k);
    if (!s.valid_for(k)) throw IndexError("basis subset exceeds generator count");
    e.add_term(s, coeff);
    return e;
}

GrassmannElement GrassmannElement::generator(int k, int i) {
    if (i < 0 || i >= k) throw IndexError("generator index out of range");
    return basis(k, IndexSet::single(i));
}

Rational GrassmannElement::coefficient(IndexSet s) const {
    if (!s.valid_for(k_)) throw IndexError("subset " + s.describe() + " invalid for k=" + std::to_string(k_));
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void GrassmannElement::add_term(IndexSet s, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement out(k_);
    for (const auto& [s, c] : coeffs_) out.coeffs_.emplace(s, -c);
    return out;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& other) {
    if (k_ != other.k_) throw DimensionMismatchError("generator counts differ in addition");
    for (const auto& [s, c] : other.coeffs_) add_term(s, c);
    return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& other) {
    if (k_ != other.k_) throw DimensionMismatchError("generator counts differ in subtraction");
    for (const auto& [s, c] : other.coeffs_) add_term(s, -c);
    return *this;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    if (a.k_ != b.k_) throw DimensionMismatchError("generator counts differ in multiplication");
    GrassmannElement out(a.k_);
    for (const auto& [s, cs] : a.coeffs_) {
        for (const auto& [t, ct] : b.coeffs_) {
            if (!s.disjoint_from(t)) continue; // repeated generator squares to zero
            Rational c = cs * ct;
            if (merge_inversions(s, t) % 2 != 0) c = -c;
            out.add_term(s.united(t), c);
        }
    }
    return out;
}

GrassmannElement operator*(const Rational& c, const GrassmannElement& a) {
    GrassmannElement out(a.generators());
    if (c == 0) return out;
    for (const auto& [s, cs] : a.terms()) {
        Rational prod = c * cs;
        out.add_term(s, prod);
    }
    return out;
}

} // namespace supermorph
