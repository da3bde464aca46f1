#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "supermorph/errors.hpp"

namespace supermorph {

/// Exact rational scalar. Every computation in this library is exact; there
/// are no tolerances anywhere.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

/// num/den with canonicalization (gcd reduced, positive denominator).
/// Throws ArgumentError when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (decimal). Throws ParseError on malformed input
/// or q == 0. The result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string to_string(const Rational& value);

bool is_zero_vec(const Vec& v);

} // namespace supermorph
