#pragma once

#include <cstddef>
#include <vector>

#include "totpos/errors.hpp"
#include "totpos/matrix.hpp"

namespace totpos {
namespace detail {

// Fraction-free (Bareiss) determinant of an integer matrix. Destroys its
// argument. Every intermediate entry is itself a minor of the input, so
// nothing but exact divisions occur.
inline bigint bareiss_det(std::vector<bigint>& a, std::size_t n) {
    if (n == 0) return bigint(1);
    bigint prev(1);
    int flips = 0;
    auto at = [&](std::size_t i, std::size_t j) -> bigint& { return a[i * n + j]; };
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sign(at(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sign(at(p, k)) == 0) ++p;
            if (p == n) return bigint(0);
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
            ++flips;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                bigint t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    bigint d = at(n - 1, n - 1);
    return (flips % 2 == 0) ? d : bigint(-d);
}

} // namespace detail

// Exact determinant of a square rational matrix: clear row denominators,
// run Bareiss over the integers, divide the scale back out.
inline rational det(const exact_matrix& a) {
    if (a.rows() != a.cols()) throw input_error("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<bigint> work(n * n);
    bigint scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        bigint l(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            bigint q = l / a(i, j).get_den();
            work[i * n + j] = a(i, j).get_num() * q;
        }
        scale *= l;
    }
    rational r(detail::bareiss_det(work, n), scale);
    r.canonicalize();
    return r;
}

// Validates the index sets of a minor: strictly increasing, equal length
// >= 1, within bounds. Indices are 0-based.
inline void check_minor_sets(const exact_matrix& a,
                             const std::vector<std::size_t>& row_set,
                             const std::vector<std::size_t>& col_set) {
    if (row_set.empty() || row_set.size() != col_set.size())
        throw input_error("minor index sets must be nonempty and of equal size");
    for (std::size_t i = 0; i < row_set.size(); ++i) {
        if (row_set[i] >= a.rows() || col_set[i] >= a.cols())
            throw input_error("minor index out of range");
        if (i > 0 && (row_set[i] <= row_set[i - 1] || col_set[i] <= col_set[i - 1]))
            throw input_error("minor index sets must be strictly increasing");
    }
}

// det A[row_set | col_set], exactly.
inline rational minor(const exact_matrix& a,
                      const std::vector<std::size_t>& row_set,
                      const std::vector<std::size_t>& col_set) {
    check_minor_sets(a, row_set, col_set);
    return det(a.submatrix(row_set, col_set));
}

namespace detail {

// Lexicographic successor of a k-combination of {0,...,n-1}; false at the end.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

} // namespace detail

} // namespace totpos
