#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "totpos/binary_config.hpp"
#include "totpos/classify.hpp"
#include "totpos/matrix.hpp"

namespace totpos {

// C_x(A): bit (i,j) set iff a_ij = x exactly.
inline binary_config configuration(const exact_matrix& a, const rational& x) {
    binary_config c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) == x) c.set(i, j, true);
    return c;
}

// Number of occurrences of x in A.
inline std::size_t multiplicity(const exact_matrix& a, const rational& x) {
    std::size_t n = 0;
    for (const rational& v : a.entries())
        if (v == x) ++n;
    return n;
}

inline std::vector<rational> distinct_values_sorted(const exact_matrix& a) {
    std::vector<rational> v(a.entries());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// The k-th smallest (or largest) distinct entry value; an entry with
// exactly k-1 distinct values strictly below (above) it.
inline rational kth_smallest_value(const exact_matrix& a, std::size_t k, bool largest = false) {
    if (k < 1) throw input_error("rank k must be positive");
    std::vector<rational> vals = distinct_values_sorted(a);
    if (k > vals.size()) throw input_error("matrix has fewer distinct values than requested rank");
    return largest ? vals[vals.size() - k] : vals[k - 1];
}

struct all_ones_witness {
    std::size_t row1 = 0, row2 = 0, col1 = 0, col2 = 0;
};

// Zarankiewicz condition: does M contain a 2x2 submatrix of ones?
// Witness is the lexicographically first such (row pair, column pair).
inline std::optional<all_ones_witness> has_all_ones_2x2(const binary_config& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i1 = 0; i1 < rows; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < rows; ++i2) {
            std::size_t first = cols; // first column where both rows carry a 1
            for (std::size_t j = 0; j < cols; ++j) {
                if (m.get(i1, j) && m.get(i2, j)) {
                    if (first < cols) return all_ones_witness{i1, i2, first, j};
                    first = j;
                }
            }
        }
    return std::nullopt;
}

// Per-diagonal audit of the k smallest (largest) distinct entries of a
// square TP matrix against the 2^k - 1 bound. Diagonals are indexed
// d_c = {(i,j) : i = c + j} with c in [1-n, n-1]; for the largest entries
// the anti-diagonals {(i,j) : i + j = const} are used instead.
struct entry_rank_report {
    std::size_t k = 0;
    bool largest = false;
    std::vector<rational> values;              // the k extreme distinct values
    std::map<long, std::size_t> diagonal_counts; // offset -> count among those values
    std::size_t total = 0;
    std::size_t per_diagonal_bound = 0; // 2^k - 1
    std::size_t total_bound = 0;        // (2^k - 1)(2n - 1)
    bool per_diagonal_ok = true;
    bool total_ok = true;
};

inline entry_rank_report smallest_k_audit(const exact_matrix& a, std::size_t k, bool largest = false) {
    if (a.rows() != a.cols()) throw precondition_error("audit requires a square matrix");
    if (k < 1) throw input_error("rank k must be positive");
    if (!is_tp(a)) throw precondition_error("audit requires a TP matrix");
    const std::size_t n = a.rows();

    std::vector<rational> vals = distinct_values_sorted(a);
    const std::size_t kk = std::min<std::size_t>(k, vals.size());

    entry_rank_report rep;
    rep.k = k;
    rep.largest = largest;
    if (largest)
        rep.values.assign(vals.end() - kk, vals.end());
    else
        rep.values.assign(vals.begin(), vals.begin() + kk);

    std::set<rational> extreme(rep.values.begin(), rep.values.end());
    for (long c = 1 - static_cast<long>(n); c <= static_cast<long>(n) - 1; ++c)
        rep.diagonal_counts[c] = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!extreme.count(a(i, j))) continue;
            long c = largest ? static_cast<long>(i) + static_cast<long>(j) - (static_cast<long>(n) - 1)
                             : static_cast<long>(i) - static_cast<long>(j);
            ++rep.diagonal_counts[c];
            ++rep.total;
        }

    rep.per_diagonal_bound = (k >= 8 * sizeof(std::size_t) - 1)
                                 ? ~std::size_t(0)
                                 : (std::size_t(1) << k) - 1;
    rep.total_bound = (rep.per_diagonal_bound == ~std::size_t(0))
                          ? ~std::size_t(0)
                          : rep.per_diagonal_bound * (2 * n - 1);
    for (const auto& [c, cnt] : rep.diagonal_counts)
        if (cnt > rep.per_diagonal_bound) rep.per_diagonal_ok = false;
    rep.total_ok = rep.total <= rep.total_bound;
    return rep;
}

} // namespace totpos
