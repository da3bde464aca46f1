#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "supermorph/strata.hpp"

using namespace supermorph;

namespace {

Vec e(std::size_t n, std::size_t i) {
    Vec v(n, Rational(0));
    v[i] = 1;
    return v;
}

Vec scaled(const Vec& v, const Rational& c) {
    Vec out;
    for (const Rational& x : v) out.push_back(c * x);
    return out;
}

Vec plus(const Vec& a, const Vec& b) {
    Vec out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

} // namespace

TEST_CASE("stratum classification") {
    CHECK(classify_stratum({3, 3, {Vec(3, Rational(0)), Vec(3, Rational(0)), Vec(3, Rational(0))}}) == 0);

    const Vec dir{Rational(2), Rational(-1), Rational(3)};
    CHECK(classify_stratum({3, 3, {scaled(dir, 1), scaled(dir, -2), scaled(dir, make_rational(1, 2))}}) == 1);

    CHECK(classify_stratum({3, 3, {e(3, 0), e(3, 1), plus(e(3, 0), e(3, 1))}}) == 2);
    CHECK(classify_stratum({3, 3, {e(3, 0), e(3, 1), e(3, 2)}}) == 3);
}

TEST_CASE("classification is invariant under invertible row mixing") {
    Rng rng(51);
    for (int it = 0; it < 100; ++it) {
        const std::size_t k = static_cast<std::size_t>(rng.int_in(1, 4));
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 4));
        const OddVectorSystem s = test::random_system(rng, k, n);

        // draw an invertible k x k over Q
        std::vector<Vec> g;
        do {
            g.clear();
            for (std::size_t i = 0; i < k; ++i) g.push_back(rng.vector(k, 2, 2));
        } while (exact_rank(RatMatrix::from_rows(g)) != k);

        OddVectorSystem mixed{k, n, std::vector<Vec>(k, Vec(n, Rational(0)))};
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t t = 0; t < k; ++t) {
                    mixed.vectors[i][j] += g[i][t] * s.vectors[t][j];
                }
            }
        }
        CHECK(classify_stratum(mixed) == classify_stratum(s));
    }
}

TEST_CASE("wedge matrix") {
    const Vec dir{Rational(1), Rational(2), Rational(0)};
    const OddVectorSystem rank1{3, 3, {scaled(dir, 2), scaled(dir, -1), scaled(dir, 3)}};
    for (const auto& [ij, bv] : wedge_matrix(rank1)) CHECK(bv.is_zero());

    // dependent k = 2 data has vanishing J_12
    const OddVectorSystem pair{2, 3, {dir, scaled(dir, -7)}};
    CHECK(wedge_matrix(pair).at({0, 1}).is_zero());

    // psi3 = a psi1 + b psi2: J13 = b J12 and J23 = -a J12
    Rng rng(52);
    for (int it = 0; it < 100; ++it) {
        const Vec psi1 = rng.vector(3, 3, 2);
        const Vec psi2 = rng.vector(3, 3, 2);
        const Rational a = rng.rational(3, 2);
        const Rational b = rng.rational(3, 2);
        const Vec psi3 = plus(scaled(psi1, a), scaled(psi2, b));
        const auto j = wedge_matrix({3, 3, {psi1, psi2, psi3}});
        CHECK(j.at({0, 2}) == b * j.at({0, 1}));
        CHECK(j.at({1, 2}) == Rational(-1) * (a * j.at({0, 1})));
    }
}

TEST_CASE("wedge matrix vanishes exactly on rank <= 1 systems") {
    Rng rng(53);
    for (int it = 0; it < 200; ++it) {
        const std::size_t k = static_cast<std::size_t>(rng.int_in(2, 4));
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 4));
        const std::size_t r = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(std::min(k, n))));
        const OddVectorSystem s = sample_stratum(k, n, r, rng.fork_seed());
        bool all_zero = true;
        for (const auto& [ij, bv] : wedge_matrix(s)) {
            if (!bv.is_zero()) all_zero = false;
        }
        CHECK(all_zero == (classify_stratum(s) <= 1));
    }
}

TEST_CASE("stratum sampling is deterministic and hits the requested rank") {
    CHECK(sample_stratum(3, 3, 2, 99) == sample_stratum(3, 3, 2, 99));
    const OddVectorSystem zeros = sample_stratum(4, 2, 0, 1);
    for (const Vec& v : zeros.vectors) CHECK(is_zero_vec(v));

    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::size_t r = 0; r <= std::min(k, n); ++r) {
                for (std::uint64_t seed = 0; seed < 50; ++seed) {
                    CHECK(classify_stratum(sample_stratum(k, n, r, seed)) == r);
                }
            }
        }
    }

    CHECK_THROWS_AS(sample_stratum(2, 2, 3, 0), ArgumentError);
}

TEST_CASE("dimension oracles") {
    CHECK(stratum_dimension_oracle(3, 3, 3) == 9);
    CHECK(stratum_dimension_oracle(3, 3, 2) == 8);
    CHECK(stratum_dimension_oracle(3, 3, 1) == 5);
    CHECK(stratum_dimension_oracle(2, 2, 1) == 3);
    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::size_t n = 1; n <= 4; ++n) {
            CHECK(stratum_dimension_oracle(k, n, std::min(k, n)) == k * n);
        }
    }
    CHECK_THROWS_AS(stratum_dimension_oracle(2, 2, 3), ArgumentError);
}

TEST_CASE("jacobian dimension estimates") {
    CHECK(jacobian_dimension_estimate(2, 2, 1, 10, 7) == 3);
    CHECK(jacobian_dimension_estimate(3, 3, 2, 10, 7) == 8);
    CHECK(jacobian_dimension_estimate(3, 3, 1, 10, 7) == 5);
    CHECK_THROWS_AS(jacobian_dimension_estimate(3, 3, 3, 10, 7), ArgumentError);
    CHECK_THROWS_AS(jacobian_dimension_estimate(3, 3, 1, 0, 7), ArgumentError);

    // the two oracles agree everywhere in the small range
    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::size_t r = 0; r < std::min(k, n); ++r) {
                CHECK(jacobian_dimension_estimate(k, n, r, 5, 1000 + k * 16 + n * 4 + r) ==
                      stratum_dimension_oracle(k, n, r));
            }
        }
    }
}

TEST_CASE("stratum reports carry the printed-count mismatch") {
    const StratumReport r1 = make_stratum_report(sample_stratum(3, 3, 1, 5));
    CHECK(r1.r == 1);
    REQUIRE(r1.paper_dimension.has_value());
    CHECK(*r1.paper_dimension == 4);
    CHECK(r1.oracle_dimension == 5);
    REQUIRE(r1.jacobian_dimension.has_value());
    CHECK(*r1.jacobian_dimension == 5);
    CHECK(r1.mismatch_flag);

    const StratumReport r2 = make_stratum_report(sample_stratum(3, 3, 2, 5));
    CHECK(*r2.paper_dimension == 8);
    CHECK(r2.oracle_dimension == 8);
    CHECK_FALSE(r2.mismatch_flag);

    const StratumReport r3 = make_stratum_report(sample_stratum(3, 3, 3, 5));
    CHECK(*r3.paper_dimension == 9);
    CHECK(r3.oracle_dimension == 9);
    CHECK_FALSE(r3.jacobian_dimension.has_value()); // open stratum: nothing to linearize
    CHECK_FALSE(r3.mismatch_flag);

    CHECK_FALSE(paper_stratum_dimension(2, 2, 1).has_value());
}

TEST_CASE("physics labels are k = 4 strings only") {
    CHECK(physics_label(4, 0) == "maximal supersymmetry");
    CHECK(physics_label(4, 2) == "half-maximal supersymmetry");
    CHECK(physics_label(4, 4) == "non-supersymmetric");
    CHECK_FALSE(physics_label(4, 1).has_value());
    CHECK_FALSE(physics_label(3, 0).has_value());
}

TEST_CASE("classification agrees with the minor-rank oracle, randomized") {
    Rng rng(54);
    for (int it = 0; it < 500; ++it) {
        const std::size_t k = static_cast<std::size_t>(rng.int_in(1, 4));
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 4));
        const OddVectorSystem s = test::random_system(rng, k, n);
        CHECK(classify_stratum(s) == test::oracle_minor_rank(RatMatrix::from_rows(s.vectors)));
    }
}

TEST_CASE("k = 2 cross-check: rank <= 1 is exactly validity with zero even sector") {
    Rng rng(55);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 4));
        const OddVectorSystem s = test::random_system(rng, 2, n);
        const PullbackData d = PullbackData::make(2, n, Vec(n, Rational(0)), s.vectors);
        CHECK((classify_stratum(s) <= 1) == is_valid_morphism(d).valid());
    }
}

TEST_CASE("k = 3 checker") {
    const PullbackData zeros = PullbackData::make(
        3, 2, Vec(2, Rational(0)), {Vec(2, Rational(0)), Vec(2, Rational(0)), Vec(2, Rational(0))});
    CHECK(check_k3_morphism(zeros, 2).clean());

    const PullbackData mixed = PullbackData::make(
        3, 2, Vec(2, Rational(0)), {e(2, 0), e(2, 1), Vec(2, Rational(0))});
    const K3Report rep = check_k3_morphism(mixed, 2);
    CHECK(!rep.clean());
    REQUIRE(rep.failing_pairs.size() == 1);
    CHECK(rep.failing_pairs[0] == IndexSet::of({0, 1}));
    for (const Violation& v : rep.product_check.violations) CHECK(v.sector == IndexSet::of({0, 1}));

    Rng rng(56);
    for (int it = 0; it < 30; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(2, 3));
        const OddVectorSystem s = sample_stratum(3, n, 1, rng.fork_seed());
        const PullbackData d = PullbackData::make(3, n, rng.vector(n, 3, 2), s.vectors);
        CHECK(check_k3_morphism(d, 2).clean());
    }

    CHECK_THROWS_AS(check_k3_morphism(PullbackData::make(2, 2, Vec(2, Rational(0)),
                                                         {e(2, 0), e(2, 0)}),
                                      2),
                    UnsupportedKError);
}
