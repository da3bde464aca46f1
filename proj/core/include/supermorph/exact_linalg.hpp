#pragma once

#include <cstddef>
#include <vector>

#include "supermorph/errors.hpp"
#include "supermorph/rational.hpp"

namespace supermorph {

/// Dense matrix of rationals, row-major.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);
    static RatMatrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Exact rank. Denominators are cleared row by row, then fraction-free
/// (Bareiss) elimination runs over the integers: every intermediate entry is
/// a minor of the scaled matrix, and the trailing division is exact by
/// Sylvester's identity. No pivot-size heuristics exist or are needed.
std::size_t exact_rank(const RatMatrix& m);

/// Exact determinant by cofactor expansion; intended for small matrices.
/// Throws ArgumentError when the matrix is not square.
Rational determinant(const RatMatrix& m);

/// Determinant of the square submatrix on the given row/column selections.
Rational submatrix_determinant(const RatMatrix& m,
                               const std::vector<std::size_t>& row_sel,
                               const std::vector<std::size_t>& col_sel);

} // namespace supermorph
