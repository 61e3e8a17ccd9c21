#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "totpos/binary_config.hpp"
#include "totpos/cycles.hpp"
#include "totpos/errors.hpp"

namespace totpos {

// Permutation of [1..n] in one-line notation.
class permutation {
public:
    explicit permutation(std::vector<std::size_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t v : img_) {
            if (v < 1 || v > img_.size() || seen[v - 1])
                throw input_error("not a permutation of [1..n]");
            seen[v - 1] = true;
        }
    }

    static permutation parse(const std::string& one_line) {
        std::vector<std::size_t> img;
        for (char c : one_line) {
            if (c < '1' || c > '9') throw input_error("permutation literal must use digits 1-9");
            img.push_back(static_cast<std::size_t>(c - '0'));
        }
        return permutation(img);
    }

    std::size_t size() const { return img_.size(); }
    std::size_t operator()(std::size_t i) const { return img_[i - 1]; } // 1-based
    const std::vector<std::size_t>& images() const { return img_; }

    bool operator==(const permutation& o) const { return img_ == o.img_; }

private:
    std::vector<std::size_t> img_;
};

inline binary_config permutation_matrix(const permutation& p) {
    binary_config m(p.size(), p.size());
    for (std::size_t i = 1; i <= p.size(); ++i) m.set(i - 1, p(i) - 1, true);
    return m;
}

namespace detail {

// count[i][j] = number of ones of m in rows <= i, cols <= j (1-based, 0 row/col = 0).
inline std::vector<std::vector<std::size_t>> prefix_counts(const binary_config& m) {
    std::vector<std::vector<std::size_t>> c(m.rows() + 1,
                                            std::vector<std::size_t>(m.cols() + 1, 0));
    for (std::size_t i = 1; i <= m.rows(); ++i)
        for (std::size_t j = 1; j <= m.cols(); ++j)
            c[i][j] = c[i - 1][j] + c[i][j - 1] - c[i - 1][j - 1] + (m.get(i - 1, j - 1) ? 1 : 0);
    return c;
}

} // namespace detail

// pi <= sigma in Bruhat order: the prefix-rectangle one-counts of M(pi)
// dominate those of M(sigma) everywhere.
inline bool bruhat_leq_perm(const permutation& pi, const permutation& sigma) {
    if (pi.size() != sigma.size()) throw input_error("permutation size mismatch");
    auto a = detail::prefix_counts(permutation_matrix(pi));
    auto b = detail::prefix_counts(permutation_matrix(sigma));
    for (std::size_t i = 1; i <= pi.size(); ++i)
        for (std::size_t j = 1; j <= pi.size(); ++j)
            if (a[i][j] < b[i][j]) return false;
    return true;
}

// Splits a two-regular cycle into the even-position permutation pi and
// the odd-position permutation sigma. Only even rotations are applied --
// they leave the even/odd classes and the weight function alone -- with
// the topmost-then-leftmost even position as the canonical start.
// Traversing the cycle in the other direction therefore swaps pi and
// sigma, matching the sign flip of the weight function. M(pi) + M(sigma)
// is the cycle's support.
inline std::pair<permutation, permutation> cycle_to_permutation_pair(const orthogonal_cycle& c) {
    if (c.frame_rows() != c.frame_cols())
        throw input_error("two-regular cycles require a square frame");
    if (!c.is_two_regular())
        throw input_error("cycle does not visit every row and column exactly twice");
    const std::size_t n = c.frame_rows();

    std::vector<grid_position> seq(c.positions().begin(), c.positions().end() - 1);
    const std::size_t len = seq.size(); // 2n

    std::size_t start = 0;
    for (std::size_t i = 2; i < len; i += 2)
        if (seq[i] < seq[start]) start = i;

    std::vector<grid_position> norm(len);
    for (std::size_t s = 0; s < len; ++s) norm[s] = seq[(start + s) % len];

    std::vector<std::size_t> pi_img(n, 0), sigma_img(n, 0);
    for (std::size_t s = 0; s < len; ++s) {
        auto& img = (s % 2 == 0) ? pi_img : sigma_img;
        img[norm[s].row - 1] = norm[s].col;
    }
    return {permutation(pi_img), permutation(sigma_img)};
}

// Both sides of the cycle-positivity / Bruhat-comparability equivalence.
struct cycle_bruhat_report {
    bool is_positive = false;
    bool pi_leq_sigma = false;
    permutation pi;
    permutation sigma;
};

inline cycle_bruhat_report cycle_positive_iff_bruhat(const orthogonal_cycle& c) {
    auto [pi, sigma] = cycle_to_permutation_pair(c);
    return cycle_bruhat_report{cycle_is_positive(c), bruhat_leq_perm(pi, sigma), pi, sigma};
}

// Row/column sum class A(R,S) of 0-1 matrices.
struct rs_class {
    std::vector<std::size_t> r;
    std::vector<std::size_t> s;
};

inline void check_ars_membership(const binary_config& a, const rs_class& cls) {
    if (a.rows() != cls.r.size() || a.cols() != cls.s.size())
        throw input_error("matrix shape does not match the class A(R,S)");
    if (a.row_sums() != cls.r || a.col_sums() != cls.s)
        throw input_error("matrix is not a member of A(R,S)");
}

// Bruhat order on A(R,S): one-counts on complementary corners
// {i+1..m} x {j+1..n} of a1 dominate those of a2 for every (i,j).
inline bool bruhat_leq_ars(const binary_config& a1, const binary_config& a2, const rs_class& cls) {
    check_ars_membership(a1, cls);
    check_ars_membership(a2, cls);
    auto p1 = detail::prefix_counts(a1);
    auto p2 = detail::prefix_counts(a2);
    const std::size_t m = a1.rows(), n = a1.cols();
    auto suffix = [&](const std::vector<std::vector<std::size_t>>& p, std::size_t i, std::size_t j) {
        return p[m][n] - p[i][n] - p[m][j] + p[i][j];
    };
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            if (suffix(p1, i, j) < suffix(p2, i, j)) return false;
    return true;
}

// Theorem 7.3 data: the even/odd position matrices of a collection and
// both sides of the equivalence. Strict dominance in at least one corner
// is required explicitly rather than relying on the two-permutation
// automatic-strictness argument.
struct collection_bruhat_report {
    binary_config m2; // even positionings
    binary_config m1; // odd positionings
    bool is_positive = false;
    bool m2_leq_m1_strict = false;
};

inline collection_bruhat_report collection_to_matrix_pair(const cycle_collection& o) {
    const std::size_t m = o.frame_rows(), n = o.frame_cols();
    binary_config evens(m, n), odds(m, n);
    for (const auto& c : o.cycles()) {
        const auto& p = c.positions();
        for (std::size_t l = 1; l <= c.k(); ++l) {
            const grid_position& pe = p[2 * l];
            const grid_position& po = p[2 * l - 1];
            if (evens.get(pe.row - 1, pe.col - 1))
                throw input_error("collection repeats an even position");
            evens.set(pe.row - 1, pe.col - 1, true);
            if (odds.get(po.row - 1, po.col - 1))
                throw input_error("collection repeats an odd position");
            odds.set(po.row - 1, po.col - 1, true);
        }
    }

    collection_bruhat_report rep{evens, odds, false, false};
    rep.is_positive = collection_is_positive(o);

    rs_class cls{evens.row_sums(), evens.col_sums()};
    bool leq = bruhat_leq_ars(evens, odds, cls);
    bool strict = false;
    if (leq) {
        auto p1 = detail::prefix_counts(evens);
        auto p2 = detail::prefix_counts(odds);
        auto suffix = [&](const std::vector<std::vector<std::size_t>>& p, std::size_t i, std::size_t j) {
            return p[m][n] - p[i][n] - p[m][j] + p[i][j];
        };
        for (std::size_t i = 0; i <= m && !strict; ++i)
            for (std::size_t j = 0; j <= n && !strict; ++j)
                if (suffix(p1, i, j) > suffix(p2, i, j)) strict = true;
    }
    rep.m2_leq_m1_strict = leq && strict;
    return rep;
}

} // namespace totpos
