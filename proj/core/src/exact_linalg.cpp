#include "supermorph/exact_linalg.hpp"

namespace supermorph {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatchError("ragged rows in matrix construction");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::size_t exact_rank(const RatMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // integer working copy: each row times the lcm of its denominators
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& q = m.at(i, j);
            a[i][j] = q.get_num() * (lcm / q.get_den());
        }
    }

    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw ArgumentError("determinant of non-square matrix");
    std::vector<std::size_t> all(m.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return submatrix_determinant(m, all, all);
}

namespace {

Rational det_recursive(const RatMatrix& m,
                       const std::vector<std::size_t>& rows,
                       std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    if (n == 1) return m.at(rows[0], cols[0]);
    if (n == 2) {
        return m.at(rows[0], cols[0]) * m.at(rows[1], cols[1]) -
               m.at(rows[0], cols[1]) * m.at(rows[1], cols[0]);
    }
    // expand along the first selected row
    Rational total = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(rows[0], cols[j]) == 0) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t jj = 0; jj < n; ++jj) {
            if (jj != j) sub_cols.push_back(cols[jj]);
        }
        Rational minor = det_recursive(m, sub_rows, sub_cols);
        Rational term = m.at(rows[0], cols[j]) * minor;
        if (j % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

} // namespace

Rational submatrix_determinant(const RatMatrix& m,
                               const std::vector<std::size_t>& row_sel,
                               const std::vector<std::size_t>& col_sel) {
    if (row_sel.size() != col_sel.size()) throw ArgumentError("submatrix selection is not square");
    std::vector<std::size_t> cols = col_sel;
    return det_recursive(m, row_sel, cols);
}

} // namespace supermorph
