#pragma once

// Independent oracles used only by tests. These deliberately avoid the
// library's own code paths: the Grassmann product oracle counts transpositions
// by literally sorting index lists, and the rank oracle searches for a largest
// nonvanishing minor with its own Laplace determinant.

#include <optional>
#include <utility>
#include <vector>

#include "supermorph/exact_linalg.hpp"
#include "supermorph/grassmann.hpp"
#include "supermorph/rational.hpp"

namespace supermorph::test {

/// Sorts the concatenation of two ascending index lists by adjacent swaps,
/// counting them; nullopt when an index repeats (the product vanishes).
inline std::optional<std::pair<std::vector<int>, int>> sort_count_swaps(std::vector<int> idx) {
    int swaps = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return std::nullopt;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                ++swaps;
            }
        }
    }
    return std::make_pair(idx, swaps);
}

/// Term-by-term product over all basis pairs.
inline GrassmannElement oracle_mul(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement out(a.generators());
    for (const auto& [s, cs] : a.terms()) {
        for (const auto& [t, ct] : b.terms()) {
            std::vector<int> concat = s.members();
            for (int i : t.members()) concat.push_back(i);
            const auto sorted = sort_count_swaps(std::move(concat));
            if (!sorted) continue;
            std::uint32_t bits = 0;
            for (int i : sorted->first) bits |= std::uint32_t{1} << i;
            Rational c = cs * ct;
            if (sorted->second % 2 != 0) c = -c;
            out += GrassmannElement::basis(a.generators(), IndexSet::from_bits(bits), c);
        }
    }
    return out;
}

/// Laplace-expansion determinant on an explicit element table.
inline Rational oracle_det(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rational>> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            row.reserve(n - 1);
            for (std::size_t jj = 0; jj < n; ++jj) {
                if (jj != j) row.push_back(m[i][jj]);
            }
            sub.push_back(std::move(row));
        }
        Rational term = m[0][j] * oracle_det(sub);
        if (j % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

namespace detail {
inline void subsets(std::size_t n, std::size_t size, std::size_t start,
                    std::vector<std::size_t>& current,
                    std::vector<std::vector<std::size_t>>& out) {
    if (current.size() == size) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        current.push_back(i);
        subsets(n, size, i + 1, current, out);
        current.pop_back();
    }
}
} // namespace detail

/// Largest s such that some s x s minor is nonzero.
inline std::size_t oracle_minor_rank(const RatMatrix& m) {
    const std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t s = bound; s >= 1; --s) {
        std::vector<std::vector<std::size_t>> row_sets;
        std::vector<std::vector<std::size_t>> col_sets;
        std::vector<std::size_t> cur;
        detail::subsets(m.rows(), s, 0, cur, row_sets);
        detail::subsets(m.cols(), s, 0, cur, col_sets);
        for (const auto& rs : row_sets) {
            for (const auto& cs : col_sets) {
                std::vector<std::vector<Rational>> sub(s, std::vector<Rational>(s));
                for (std::size_t i = 0; i < s; ++i) {
                    for (std::size_t j = 0; j < s; ++j) sub[i][j] = m.at(rs[i], cs[j]);
                }
                if (oracle_det(sub) != 0) return s;
            }
        }
    }
    return 0;
}

} // namespace supermorph::test
