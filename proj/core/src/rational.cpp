#include "supermorph/rational.hpp"

#include <cctype>

namespace supermorph {

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw ArgumentError("rational denominator must be nonzero");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos
                               ? std::string_view("1")
                               : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

bool is_zero_vec(const Vec& v) {
    for (const Rational& x : v) {
        if (x != 0) return false;
    }
    return true;
}

} // namespace supermorph
