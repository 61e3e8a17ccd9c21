#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "totpos/errors.hpp"
#include "totpos/matrix.hpp"
#include "totpos/minors.hpp"

namespace totpos {

// Matrix classes decided by this module.
//   tp   : every minor positive
//   tn   : every minor non-negative
//   tp_k : every k-by-k submatrix is TP (all minors of order <= k positive)
//   tp2  : alias for tp_k with k = 2
//   tns  : every minor of every size non-zero
enum class matrix_class_tag { tp, tn, tp_k, tp2, tns };

struct matrix_class {
    matrix_class_tag tag = matrix_class_tag::tp;
    std::size_t k = 0; // only for tp_k

    static matrix_class tp() { return {matrix_class_tag::tp, 0}; }
    static matrix_class tn() { return {matrix_class_tag::tn, 0}; }
    static matrix_class tp2() { return {matrix_class_tag::tp2, 2}; }
    static matrix_class tpk(std::size_t k) { return {matrix_class_tag::tp_k, k}; }
    static matrix_class tns() { return {matrix_class_tag::tns, 0}; }
};

inline std::string class_name(const matrix_class& c) {
    switch (c.tag) {
        case matrix_class_tag::tp: return "tp";
        case matrix_class_tag::tn: return "tn";
        case matrix_class_tag::tp2: return "tp2";
        case matrix_class_tag::tp_k: return "tp" + std::to_string(c.k);
        case matrix_class_tag::tns: return "tns";
    }
    return "?";
}

// A concrete failing minor. Index sets are 0-based and strictly increasing;
// value is the exact minor of the original matrix.
struct minor_witness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    rational value;
};

struct classify_result {
    bool member = false;
    std::optional<minor_witness> witness; // set iff !member
};

namespace detail {

// Row-scaled integer copy of A. Multiplying row i by the positive lcm of
// its denominators multiplies every minor by a positive constant, so all
// sign decisions carry over unchanged.
inline std::vector<bigint> integerize_rows(const exact_matrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<bigint> w(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        bigint l(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            w[i * n + j] = a(i, j).get_num() * (l / a(i, j).get_den());
    }
    return w;
}

inline std::vector<std::size_t> contiguous(std::size_t start, std::size_t len) {
    std::vector<std::size_t> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = start + i;
    return v;
}

} // namespace detail

// Fekete-style certificate: positivity of all contiguous (solid) square
// minors of orders 1..max_order. Minors are produced level by level with
// Desnanot-Jacobi condensation,
//
//   D_r(i,j) * D_{r-2}(i+1,j+1) =
//       D_{r-1}(i,j) D_{r-1}(i+1,j+1) - D_{r-1}(i,j+1) D_{r-1}(i+1,j),
//
// which costs two multiplications and one exact division per minor. The
// division is safe because every lower-order contiguous minor has already
// been verified strictly positive before its level is used as a divisor.
// On failure returns the first offender in (order, row set, col set) order.
inline classify_result contiguous_minor_certificate(const exact_matrix& a, std::size_t max_order) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t top = std::min({max_order, m, n});
    std::vector<bigint> w = detail::integerize_rows(a);

    auto fail = [&](std::size_t r, std::size_t i, std::size_t j) {
        minor_witness wit;
        wit.rows = detail::contiguous(i, r);
        wit.cols = detail::contiguous(j, r);
        wit.value = minor(a, wit.rows, wit.cols);
        return classify_result{false, wit};
    };

    // prev2 = level r-2, prev = level r-1, both as (m-r+1)x(n-r+1) grids.
    std::vector<bigint> prev2, prev, cur;
    prev.assign(m * n, bigint(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            prev[i * n + j] = w[i * n + j];
            if (sign(prev[i * n + j]) <= 0) return fail(1, i, j);
        }
    if (top == 1) return {true, std::nullopt};

    for (std::size_t r = 2; r <= top; ++r) {
        const std::size_t pr = m - r + 2; // rows in level r-1 grid
        const std::size_t pc = n - r + 2;
        const std::size_t cr = m - r + 1;
        const std::size_t cc = n - r + 1;
        cur.assign(cr * cc, bigint(0));
        for (std::size_t i = 0; i < cr; ++i) {
            for (std::size_t j = 0; j < cc; ++j) {
                bigint t = prev[i * pc + j] * prev[(i + 1) * pc + (j + 1)]
                         - prev[i * pc + (j + 1)] * prev[(i + 1) * pc + j];
                if (r >= 3) {
                    const bigint& d = prev2[(i + 1) * (pc + 1) + (j + 1)];
                    mpz_divexact(cur[i * cc + j].get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
                } else {
                    cur[i * cc + j] = t;
                }
                if (sign(cur[i * cc + j]) <= 0) return fail(r, i, j);
            }
        }
        prev2.swap(prev);
        prev.swap(cur);
    }
    return {true, std::nullopt};
}

namespace detail {

// Exhaustive minor scan in (order, row set, col set) lexicographic order.
// pred returns true when the minor is acceptable for the class.
template <typename Pred>
classify_result exhaustive_minor_scan(const exact_matrix& a, Pred&& pred) {
    const std::size_t kmax = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::size_t> rows = first_combination(k);
        do {
            std::vector<std::size_t> cols = first_combination(k);
            do {
                rational v = det(a.submatrix(rows, cols));
                if (!pred(v)) return {false, minor_witness{rows, cols, v}};
            } while (next_combination(cols, a.cols()));
        } while (next_combination(rows, a.rows()));
    }
    return {true, std::nullopt};
}

} // namespace detail

// Membership test with witness on failure. TP and TP_k use the contiguous
// certificate (validated against the exhaustive oracle in the test suite);
// TN and TNS have no shortcut and enumerate every minor.
inline classify_result classify(const exact_matrix& a, const matrix_class& cls) {
    switch (cls.tag) {
        case matrix_class_tag::tp:
            return contiguous_minor_certificate(a, std::min(a.rows(), a.cols()));
        case matrix_class_tag::tp2:
            return contiguous_minor_certificate(a, 2);
        case matrix_class_tag::tp_k: {
            if (cls.k < 1 || cls.k > std::min(a.rows(), a.cols()))
                throw input_error("tp_k order out of range");
            return contiguous_minor_certificate(a, cls.k);
        }
        case matrix_class_tag::tn:
            return detail::exhaustive_minor_scan(a, [](const rational& v) { return sign(v) >= 0; });
        case matrix_class_tag::tns:
            return detail::exhaustive_minor_scan(a, [](const rational& v) { return sign(v) != 0; });
    }
    throw input_error("unknown matrix class");
}

inline bool is_tp(const exact_matrix& a) { return classify(a, matrix_class::tp()).member; }
inline bool is_tp2(const exact_matrix& a) { return classify(a, matrix_class::tp2()).member; }

} // namespace totpos
