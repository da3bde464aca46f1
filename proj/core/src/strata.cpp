#include "supermorph/strata.hpp"

#include <algorithm>

#include "supermorph/exact_linalg.hpp"
#include "supermorph/sampling.hpp"

namespace supermorph {

void OddVectorSystem::validate() const {
    if (vectors.size() != k) throw DimensionMismatchError("vector count differs from k");
    for (const Vec& v : vectors) {
        if (v.size() != n) throw DimensionMismatchError("vector length differs from n");
    }
}

std::size_t classify_stratum(const OddVectorSystem& s) {
    s.validate();
    return exact_rank(RatMatrix::from_rows(s.vectors));
}

std::map<std::pair<std::size_t, std::size_t>, Bivector> wedge_matrix(const OddVectorSystem& s) {
    s.validate();
    std::map<std::pair<std::size_t, std::size_t>, Bivector> out;
    for (std::size_t i = 0; i < s.k; ++i) {
        for (std::size_t j = i + 1; j < s.k; ++j) {
            out.emplace(std::make_pair(i, j), wedge(s.vectors[i], s.vectors[j]));
        }
    }
    return out;
}

namespace {

std::vector<Vec> random_full_rank(Rng& rng, std::size_t rows, std::size_t cols) {
    for (;;) {
        std::vector<Vec> m;
        m.reserve(rows);
        for (std::size_t i = 0; i < rows; ++i) m.push_back(rng.vector(cols));
        if (exact_rank(RatMatrix::from_rows(m)) == std::min(rows, cols)) return m;
    }
}

} // namespace

OddVectorSystem sample_stratum(std::size_t k, std::size_t n, std::size_t r, std::uint64_t seed) {
    if (r > std::min(k, n)) throw ArgumentError("requested rank exceeds min(k, n)");
    OddVectorSystem s{k, n, std::vector<Vec>(k, Vec(n, Rational(0)))};
    if (r == 0) return s;

    Rng rng(seed);
    const std::vector<Vec> left = random_full_rank(rng, k, r);
    const std::vector<Vec> right = random_full_rank(rng, r, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational sum = 0;
            for (std::size_t t = 0; t < r; ++t) sum += left[i][t] * right[t][j];
            s.vectors[i][j] = sum;
        }
    }
    return s;
}

unsigned stratum_dimension_oracle(std::size_t k, std::size_t n, std::size_t r) {
    if (r > std::min(k, n)) throw ArgumentError("rank exceeds min(k, n)");
    return static_cast<unsigned>(r * (k + n - r));
}

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == size) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Rank of the Jacobian of all (size)x(size) minors of m, as a function of
/// all k*n entries. Gradient entries are signed cofactors.
std::size_t minor_jacobian_rank(const RatMatrix& m, std::size_t size) {
    const auto row_sets = subsets_of_size(m.rows(), size);
    const auto col_sets = subsets_of_size(m.cols(), size);
    RatMatrix jac(row_sets.size() * col_sets.size(), m.rows() * m.cols());
    std::size_t row = 0;
    for (const auto& rs : row_sets) {
        for (const auto& cs : col_sets) {
            for (std::size_t a = 0; a < size; ++a) {
                std::vector<std::size_t> rsub;
                for (std::size_t t = 0; t < size; ++t) {
                    if (t != a) rsub.push_back(rs[t]);
                }
                for (std::size_t b = 0; b < size; ++b) {
                    std::vector<std::size_t> csub;
                    for (std::size_t t = 0; t < size; ++t) {
                        if (t != b) csub.push_back(cs[t]);
                    }
                    Rational cof = submatrix_determinant(m, rsub, csub);
                    if ((a + b) % 2 != 0) cof = -cof;
                    jac.at(row, rs[a] * m.cols() + cs[b]) = cof;
                }
            }
            ++row;
        }
    }
    return exact_rank(jac);
}

} // namespace

std::optional<unsigned> jacobian_dimension_at(const OddVectorSystem& s) {
    const std::size_t r = classify_stratum(s);
    if (r == std::min(s.k, s.n)) return std::nullopt;
    const RatMatrix m = RatMatrix::from_rows(s.vectors);
    const std::size_t jac_rank = minor_jacobian_rank(m, r + 1);
    return static_cast<unsigned>(s.k * s.n - jac_rank);
}

unsigned jacobian_dimension_estimate(std::size_t k, std::size_t n, std::size_t r,
                                     std::size_t samples, std::uint64_t seed) {
    if (r >= std::min(k, n)) {
        throw ArgumentError("minors are vacuous on the open stratum; need r < min(k, n)");
    }
    if (samples < 1) throw ArgumentError("need at least one sample");
    Rng rng(seed);
    std::optional<unsigned> agreed;
    for (std::size_t i = 0; i < samples; ++i) {
        const OddVectorSystem s = sample_stratum(k, n, r, rng.fork_seed());
        const std::optional<unsigned> dim = jacobian_dimension_at(s);
        if (!dim) throw InconsistencyError("sampled system does not have the requested rank");
        if (agreed && *agreed != *dim) {
            throw InconsistencyError("sampled tangent dimensions disagree: " +
                                     std::to_string(*agreed) + " vs " + std::to_string(*dim));
        }
        agreed = dim;
    }
    return *agreed;
}

std::optional<int> paper_stratum_dimension(std::size_t k, std::size_t n, std::size_t r) {
    if (k != 3 || n != 3) return std::nullopt;
    switch (r) {
    case 1: return 4; // printed count; the determinantal formula gives 5
    case 2: return 8;
    case 3: return 9;
    default: return std::nullopt;
    }
}

std::optional<std::string_view> physics_label(std::size_t k, std::size_t r) {
    if (k != 4) return std::nullopt;
    switch (r) {
    case 0: return "maximal supersymmetry";
    case 2: return "half-maximal supersymmetry";
    case 4: return "non-supersymmetric";
    default: return std::nullopt;
    }
}

StratumReport make_stratum_report(const OddVectorSystem& s) {
    StratumReport rep;
    rep.k = s.k;
    rep.n = s.n;
    rep.r = classify_stratum(s);
    rep.paper_dimension = paper_stratum_dimension(s.k, s.n, rep.r);
    rep.oracle_dimension = stratum_dimension_oracle(s.k, s.n, rep.r);
    rep.jacobian_dimension = jacobian_dimension_at(s);
    rep.mismatch_flag =
        rep.paper_dimension && *rep.paper_dimension != static_cast<int>(rep.oracle_dimension);
    return rep;
}

K3Report check_k3_morphism(const PullbackData& d, unsigned degree_bound) {
    if (d.k != 3) throw UnsupportedKError("k = 3 checker requires three odd generators");
    K3Report out;
    out.product_check = check_homomorphism(d, degree_bound);
    const std::vector<Monomial> monos = monomials_up_to(d.n, degree_bound);
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const IndexSet pair = IndexSet::of({i, j});
            bool failed = false;
            for (const Monomial& mf : monos) {
                if (failed) break;
                for (const Monomial& mg : monos) {
                    Rational res = key_identity_residual(d, Polynomial::monomial(mf, 1),
                                                         Polynomial::monomial(mg, 1), pair);
                    if (res != 0) {
                        failed = true;
                        break;
                    }
                }
            }
            if (failed) out.failing_pairs.push_back(pair);
        }
    }
    return out;
}

} // namespace supermorph
