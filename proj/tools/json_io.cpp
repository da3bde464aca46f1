#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace supermorph::io {

namespace {

const json& expect_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::size_t expect_positive_int(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) {
        throw ParseError(std::string(what) + " must be a positive integer");
    }
    return j.get<std::size_t>();
}

} // namespace

json rational_to_json(const Rational& r) {
    return to_string(r);
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("rational values must be strings like \"3\" or \"-3/7\"");
    return parse_rational(j.get<std::string>());
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const Rational& x : v) out.push_back(rational_to_json(x));
    return out;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("vector must be an array of rational strings");
    Vec out;
    out.reserve(j.size());
    for (const json& x : j) out.push_back(rational_from_json(x));
    return out;
}

json grassmann_to_json(const GrassmannElement& e) {
    json out = json::array();
    for (const auto& [s, c] : e.terms()) {
        json indices = json::array();
        for (int i : s.members()) indices.push_back(i + 1);
        out.push_back({{"indices", indices},
                       {"num", c.get_num().get_str()},
                       {"den", c.get_den().get_str()}});
    }
    return out;
}

json polynomial_to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        out.push_back({{"exponents", m.exponents()},
                       {"num", c.get_num().get_str()},
                       {"den", c.get_den().get_str()}});
    }
    return out;
}

Polynomial polynomial_from_json(const json& j, std::size_t n) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
    Polynomial out(n);
    for (const json& term : j) {
        const json& exps = expect_field(term, "exponents");
        if (!exps.is_array()) throw ParseError("exponents must be an array");
        std::vector<unsigned> e;
        for (const json& x : exps) {
            if (!x.is_number_unsigned()) throw ParseError("exponents must be non-negative integers");
            e.push_back(x.get<unsigned>());
        }
        if (e.size() != n) throw ParseError("exponent vector length differs from n");
        Rational num = parse_rational(expect_field(term, "num").get<std::string>());
        Rational den = parse_rational(expect_field(term, "den").get<std::string>());
        if (den == 0) throw ParseError("zero denominator in polynomial term");
        out += Polynomial::monomial(Monomial(std::move(e)), num / den);
    }
    return out;
}

json morphism_to_json(const PullbackData& d) {
    json out;
    out["k"] = d.k;
    out["n"] = d.n;
    out["phi"] = vec_to_json(d.base_point);
    json psis = json::array();
    for (const Vec& psi : d.odd_vectors) psis.push_back(vec_to_json(psi));
    out["psis"] = psis;
    if (!d.even_ops.empty()) {
        json evens = json::array();
        for (const auto& [s, op] : d.even_ops) {
            json indices = json::array();
            for (int i : s.members()) indices.push_back(i + 1);
            json b = json::array();
            for (std::size_t i = 0; i < op.dimension(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < op.dimension(); ++j) {
                    row.push_back(rational_to_json(op.second_order().at(i, j)));
                }
                b.push_back(row);
            }
            evens.push_back({{"indices", indices},
                             {"A", vec_to_json(op.first_order())},
                             {"B", b}});
        }
        out["evens"] = evens;
    }
    return out;
}

PullbackData morphism_from_json(const json& j) {
    const std::size_t k = expect_positive_int(expect_field(j, "k"), "k");
    const std::size_t n = expect_positive_int(expect_field(j, "n"), "n");
    Vec phi = vec_from_json(expect_field(j, "phi"));

    const json& psis_json = expect_field(j, "psis");
    if (!psis_json.is_array()) throw ParseError("psis must be an array of vectors");
    std::vector<Vec> psis;
    for (const json& p : psis_json) psis.push_back(vec_from_json(p));

    std::map<IndexSet, EvenOperator> evens;
    if (j.contains("evens")) {
        const json& evens_json = j.at("evens");
        if (!evens_json.is_array()) throw ParseError("evens must be an array");
        for (const json& rec : evens_json) {
            const json& indices = expect_field(rec, "indices");
            if (!indices.is_array()) throw ParseError("indices must be an array");
            std::uint32_t bits = 0;
            int prev = 0;
            for (const json& x : indices) {
                if (!x.is_number_integer() || x.get<std::int64_t>() < 1) {
                    throw ParseError("indices must be positive integers");
                }
                const int i = x.get<int>();
                if (i <= prev) throw ParseError("indices must be strictly increasing");
                if (i > static_cast<int>(k)) throw ParseError("index exceeds k");
                bits |= std::uint32_t{1} << (i - 1);
                prev = i;
            }
            const IndexSet s = IndexSet::from_bits(bits);
            if (s.size() < 2) throw ParseError("even-sector subsets need at least two indices");

            Vec a = vec_from_json(expect_field(rec, "A"));
            const json& b_json = expect_field(rec, "B");
            if (!b_json.is_array() || b_json.size() != n) throw ParseError("B must be an n x n matrix");
            RatMatrix b(n, n);
            for (std::size_t r = 0; r < n; ++r) {
                const json& row = b_json.at(r);
                if (!row.is_array() || row.size() != n) throw ParseError("B must be an n x n matrix");
                for (std::size_t c = 0; c < n; ++c) b.at(r, c) = rational_from_json(row.at(c));
            }
            if (a.size() != n) throw ParseError("A length differs from n");
            if (!evens.emplace(s, EvenOperator(std::move(a), b)).second) {
                throw ParseError("duplicate even-sector subset " + s.describe());
            }
        }
    }

    try {
        return PullbackData::make(static_cast<int>(k), n, std::move(phi), std::move(psis),
                                  std::move(evens));
    } catch (const Error& e) {
        throw ParseError(std::string("inconsistent morphism spec: ") + e.what());
    }
}

json classifying_point_to_json(const ClassifyingPoint& c) {
    json out;
    out["n"] = c.dimension();
    out["phi"] = vec_to_json(c.base_point);
    out["psi1"] = vec_to_json(c.psi1);
    out["psi2"] = vec_to_json(c.psi2);
    out["parity"] = ClassifyingPoint::parity_tag;
    return out;
}

ClassifyingPoint classifying_point_from_json(const json& j) {
    const std::size_t n = expect_positive_int(expect_field(j, "n"), "n");
    ClassifyingPoint c{vec_from_json(expect_field(j, "phi")),
                       vec_from_json(expect_field(j, "psi1")),
                       vec_from_json(expect_field(j, "psi2"))};
    if (j.contains("parity") && j.at("parity") != json(ClassifyingPoint::parity_tag)) {
        throw ParseError("parity must be \"odd\"");
    }
    if (c.base_point.size() != n || c.psi1.size() != n || c.psi2.size() != n) {
        throw ParseError("vector lengths differ from n");
    }
    return c;
}

json connection_to_json(const ConnectionData& c) {
    const std::size_t n = c.dimension();
    json gamma = json::array();
    for (std::size_t m = 0; m < n; ++m) {
        json plane = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < n; ++j) {
                row.push_back(rational_to_json(c.christoffel(m, i, j)));
            }
            plane.push_back(row);
        }
        gamma.push_back(plane);
    }
    return json{{"n", n}, {"gamma", gamma}};
}

ConnectionData connection_from_json(const json& j) {
    const std::size_t n = expect_positive_int(expect_field(j, "n"), "n");
    const json& gamma = expect_field(j, "gamma");
    if (!gamma.is_array() || gamma.size() != n) throw ParseError("gamma must be an n x n x n array");
    ConnectionData c(n);
    for (std::size_t m = 0; m < n; ++m) {
        const json& plane = gamma.at(m);
        if (!plane.is_array() || plane.size() != n) throw ParseError("gamma must be an n x n x n array");
        for (std::size_t i = 0; i < n; ++i) {
            const json& row = plane.at(i);
            if (!row.is_array() || row.size() != n) throw ParseError("gamma must be an n x n x n array");
            for (std::size_t jj = 0; jj < n; ++jj) {
                c.set_christoffel(m, i, jj, rational_from_json(row.at(jj)));
            }
        }
    }
    return c;
}

json stratum_report_to_json(const StratumReport& r) {
    json out;
    out["k"] = r.k;
    out["n"] = r.n;
    out["r"] = r.r;
    out["paper_dimension"] = r.paper_dimension ? json(*r.paper_dimension) : json(nullptr);
    out["oracle_dimension"] = r.oracle_dimension;
    out["jacobian_dimension"] = r.jacobian_dimension ? json(*r.jacobian_dimension) : json(nullptr);
    out["mismatch_flag"] = r.mismatch_flag;
    return out;
}

json violations_to_json(const ViolationReport& r) {
    json out = json::array();
    for (const Violation& v : r.violations) {
        json indices = json::array();
        for (int i : v.sector.members()) indices.push_back(i + 1);
        out.push_back({{"f", v.f.exponents()},
                       {"g", v.g.exponents()},
                       {"indices", indices},
                       {"lhs", rational_to_json(v.lhs)},
                       {"rhs", rational_to_json(v.rhs)}});
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string(e.what()));
    }
}

std::string canonical_dump(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace supermorph::io
