#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "supermorph/exact_linalg.hpp"

using namespace supermorph;

namespace {

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.rational(4, 3);
    }
    return m;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(exact_rank(RatMatrix(3, 3)) == 0);
    CHECK(exact_rank(RatMatrix(0, 5)) == 0);

    RatMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(exact_rank(id) == 3);

    // dependent rows with fractions
    const RatMatrix m = RatMatrix::from_rows({{make_rational(1, 2), make_rational(1, 3)},
                                              {make_rational(3, 2), make_rational(1, 1)}});
    CHECK(exact_rank(m) == 1);
}

TEST_CASE("rank agrees with the largest-nonzero-minor oracle, randomized") {
    Rng rng(21);
    for (int it = 0; it < 400; ++it) {
        const std::size_t rows = static_cast<std::size_t>(rng.int_in(1, 4));
        const std::size_t cols = static_cast<std::size_t>(rng.int_in(1, 4));
        RatMatrix m = random_matrix(rng, rows, cols);
        // bias toward singular matrices: sometimes copy a scaled row
        if (rows >= 2 && rng.int_in(0, 1) == 0) {
            const Rational scale = rng.rational(2, 2);
            for (std::size_t j = 0; j < cols; ++j) m.at(rows - 1, j) = scale * m.at(0, j);
        }
        CHECK(exact_rank(m) == test::oracle_minor_rank(m));
    }
}

TEST_CASE("determinants") {
    const RatMatrix m2 = RatMatrix::from_rows({{Rational(1), Rational(2)},
                                               {Rational(3), Rational(4)}});
    CHECK(determinant(m2) == -2);
    CHECK_THROWS_AS(determinant(RatMatrix(2, 3)), ArgumentError);

    Rng rng(22);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 4));
        const RatMatrix m = random_matrix(rng, n, n);
        std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) table[i][j] = m.at(i, j);
        }
        CHECK(determinant(m) == test::oracle_det(table));
    }
}

TEST_CASE("submatrix determinants select the right entries") {
    const RatMatrix m = RatMatrix::from_rows({{Rational(1), Rational(2), Rational(3)},
                                              {Rational(4), Rational(5), Rational(6)},
                                              {Rational(7), Rational(8), Rational(10)}});
    CHECK(submatrix_determinant(m, {0, 1}, {1, 2}) == Rational(2) * 6 - Rational(3) * 5);
    CHECK(submatrix_determinant(m, {0}, {2}) == 3);
    CHECK_THROWS_AS(submatrix_determinant(m, {0, 1}, {0}), ArgumentError);
}
