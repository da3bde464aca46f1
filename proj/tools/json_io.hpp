#pragma once

#include <json.hpp>

#include <string>

#include "supermorph/connection.hpp"
#include "supermorph/grassmann.hpp"
#include "supermorph/morphism.hpp"
#include "supermorph/polynomial.hpp"
#include "supermorph/rational.hpp"
#include "supermorph/strata.hpp"

// JSON wire formats. Rationals travel as canonical strings ("p" or "p/q",
// q > 0); generator indices are 1-based on the wire and 0-based in the
// library. Serialization is insertion-ordered and zero-free, so dumping a
// parsed document is the canonical form of that document.
namespace supermorph::io {

using json = nlohmann::ordered_json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

/// [{"indices": [1,2], "num": "3", "den": "1"}, ...] in ascending subset order.
json grassmann_to_json(const GrassmannElement& e);

/// [{"exponents": [1,0], "num": "1", "den": "2"}, ...] in graded-lex order.
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j, std::size_t n);

/// {"k", "n", "phi", "psis", "evens"?}; "evens" is omitted when every even
/// operator is zero (the canonical form drops them).
json morphism_to_json(const PullbackData& d);
PullbackData morphism_from_json(const json& j);

/// {"n", "phi", "psi1", "psi2", "parity": "odd"}.
json classifying_point_to_json(const ClassifyingPoint& c);
ClassifyingPoint classifying_point_from_json(const json& j);

/// {"n", "gamma": [m][i][j] nested arrays of rational strings}.
json connection_to_json(const ConnectionData& c);
ConnectionData connection_from_json(const json& j);

json stratum_report_to_json(const StratumReport& r);

json violations_to_json(const ViolationReport& r);

/// Reads and parses a file; wraps failures (including byte positions from the
/// JSON parser) in ParseError.
json load_json_file(const std::string& path);

/// The one serialization used for hashing and byte-compare: two-space indent,
/// trailing newline.
std::string canonical_dump(const json& j);

} // namespace supermorph::io
