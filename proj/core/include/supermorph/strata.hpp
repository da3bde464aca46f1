#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "supermorph/bivector.hpp"
#include "supermorph/morphism.hpp"
#include "supermorph/rational.hpp"

namespace supermorph {

/// k tangent vectors at a point of R^n; the raw datum a rank stratum is
/// read off from.
struct OddVectorSystem {
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<Vec> vectors;

    void validate() const;
    bool operator==(const OddVectorSystem&) const = default;
};

/// Exact rank of the k x n matrix with rows psi_1..psi_k.
std::size_t classify_stratum(const OddVectorSystem& s);

/// All pairwise wedges J_{ij} = psi_i ^ psi_j for i < j (0-based pairs).
std::map<std::pair<std::size_t, std::size_t>, Bivector> wedge_matrix(const OddVectorSystem& s);

/// Deterministic system of exact rank r, built as a product of full-rank
/// k x r and r x n factors with small rational entries (redrawn until both
/// factors have full rank). Throws ArgumentError when r > min(k, n).
OddVectorSystem sample_stratum(std::size_t k, std::size_t n, std::size_t r, std::uint64_t seed);

/// Dimension of the rank-<= r determinantal variety of k x n matrices:
/// r * (k + n - r). Throws ArgumentError when r > min(k, n).
unsigned stratum_dimension_oracle(std::size_t k, std::size_t n, std::size_t r);

/// kn minus the exact rank of the Jacobian of all (r+1)x(r+1) minors at the
/// given rank-r system. Every rank-exactly-r matrix is a smooth point of the
/// rank-<= r variety, so this is its local dimension there. Returns nullopt
/// when r = min(k, n) (there are no (r+1)-minors to linearize).
std::optional<unsigned> jacobian_dimension_at(const OddVectorSystem& s);

/// Samples `samples` rank-r systems from the seed and returns their common
/// Jacobian dimension. Throws ArgumentError when r >= min(k, n) or
/// samples < 1, and InconsistencyError when sampled values disagree.
unsigned jacobian_dimension_estimate(std::size_t k, std::size_t n, std::size_t r,
                                     std::size_t samples, std::uint64_t seed);

/// Stratum dimensions as printed in the source enumeration for k = n = 3;
/// absent elsewhere. The r = 1 entry (4) disagrees with the determinantal
/// count (5) and is carried verbatim so reports can flag the mismatch.
std::optional<int> paper_stratum_dimension(std::size_t k, std::size_t n, std::size_t r);

/// Supersymmetry-breaking tag for k = 4 strata; documentation string only.
std::optional<std::string_view> physics_label(std::size_t k, std::size_t r);

struct StratumReport {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t r = 0;
    std::optional<int> paper_dimension;
    unsigned oracle_dimension = 0;
    std::optional<unsigned> jacobian_dimension;
    bool mismatch_flag = false;
};

/// Full report for the stratum of a concrete system; jacobian_dimension is
/// computed at the system's own point (deterministic, no sampling).
StratumReport make_stratum_report(const OddVectorSystem& s);

struct K3Report {
    ViolationReport product_check;
    /// two-element sectors whose key identity fails on some tested pair
    std::vector<IndexSet> failing_pairs;

    bool clean() const { return product_check.empty() && failing_pairs.empty(); }
};

/// k = 3 brute force: the full product check plus, per generator pair, the
/// key-identity residual over the same monomial range. Throws
/// UnsupportedKError when d.k != 3.
K3Report check_k3_morphism(const PullbackData& d, unsigned degree_bound);

} // namespace supermorph
