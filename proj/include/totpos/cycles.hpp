#pragma once

#include <cstddef>
#include <vector>

#include "totpos/binary_config.hpp"
#include "totpos/errors.hpp"

namespace totpos {

// Matrix position, 1-based as in the definitions this module implements.
struct grid_position {
    std::size_t row = 0;
    std::size_t col = 0;
    bool operator==(const grid_position&) const = default;
    bool operator<(const grid_position& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

// Closed position sequence (p_0, ..., p_{2k}) with p_0 = p_{2k}, where
// p_{2i}, p_{2i+1} share a row and p_{2i+1}, p_{2i+2} share a column.
class orthogonal_cycle {
public:
    orthogonal_cycle(std::size_t frame_rows, std::size_t frame_cols,
                     std::vector<grid_position> positions)
        : m_(frame_rows), n_(frame_cols), pos_(std::move(positions)) {
        if (pos_.size() < 3 || pos_.size() % 2 == 0)
            throw input_error("orthogonal cycle needs an odd position count 2k+1 with k >= 1");
        if (!(pos_.front() == pos_.back()))
            throw input_error("orthogonal cycle must be closed (p_0 = p_2k)");
        for (const grid_position& p : pos_) {
            if (p.row < 1 || p.row > m_ || p.col < 1 || p.col > n_)
                throw input_error("cycle position outside its frame");
        }
        for (std::size_t i = 0; i + 1 < pos_.size(); ++i) {
            const bool row_step = (i % 2 == 0);
            if (row_step && pos_[i].row != pos_[i + 1].row)
                throw input_error("positions p_2i and p_2i+1 must share a row");
            if (!row_step && pos_[i].col != pos_[i + 1].col)
                throw input_error("positions p_2i+1 and p_2i+2 must share a column");
        }
    }

    std::size_t frame_rows() const { return m_; }
    std::size_t frame_cols() const { return n_; }
    std::size_t k() const { return pos_.size() / 2; }
    const std::vector<grid_position>& positions() const { return pos_; }

    // Traversal in the opposite direction; negates the weight function.
    // The plain sequence reversal starts with a column move, so the result
    // is rotated one step to restore the row-first alternation.
    orthogonal_cycle reversed() const {
        std::vector<grid_position> r;
        r.reserve(pos_.size());
        for (std::size_t i = pos_.size() - 1; i-- > 0;) r.push_back(pos_[i]);
        r.push_back(r.front());
        return orthogonal_cycle(m_, n_, std::move(r));
    }

    // 0-1 matrix of visited positions.
    binary_config support() const {
        binary_config s(m_, n_);
        for (const grid_position& p : pos_) s.set(p.row - 1, p.col - 1, true);
        return s;
    }

    // Every row and column visited by exactly two distinct positions,
    // and no position repeated: the cycles that split into two
    // permutations.
    bool is_two_regular() const;

private:
    std::size_t m_, n_;
    std::vector<grid_position> pos_;
};

// The cycle's weight at (i,j): even-indexed positions p_{2l}, 0 < l <= k,
// lying in the open quadrant P(i,j) = {(u,v) : u > i, v > j}, minus the
// odd-indexed ones there. Arguments range over 0 <= i <= m, 0 <= j <= n.
inline long weight_function(const orthogonal_cycle& c, std::size_t i, std::size_t j) {
    if (i > c.frame_rows() || j > c.frame_cols())
        throw input_error("weight function argument outside [0,m]x[0,n]");
    long w = 0;
    const auto& p = c.positions();
    for (std::size_t l = 1; l <= c.k(); ++l) {
        if (p[2 * l].row > i && p[2 * l].col > j) ++w;
        if (p[2 * l - 1].row > i && p[2 * l - 1].col > j) --w;
    }
    return w;
}

namespace detail {

// Adds the cycle's +/- position masses into an (m+1)x(n+1) delta grid
// indexed by (row, col); suffix-summing that grid gives the weight table.
inline void add_cycle_masses(const orthogonal_cycle& c, std::vector<long>& delta,
                             std::size_t n_cols_plus1) {
    const auto& p = c.positions();
    for (std::size_t l = 1; l <= c.k(); ++l) {
        delta[p[2 * l].row * n_cols_plus1 + p[2 * l].col] += 1;
        delta[p[2 * l - 1].row * n_cols_plus1 + p[2 * l - 1].col] -= 1;
    }
}

} // namespace detail

// Nonempty family of cycles over one frame.
class cycle_collection {
public:
    cycle_collection(std::size_t frame_rows, std::size_t frame_cols,
                     std::vector<orthogonal_cycle> cycles)
        : m_(frame_rows), n_(frame_cols), cycles_(std::move(cycles)) {
        if (cycles_.empty()) throw input_error("cycle collection must be nonempty");
        for (const auto& c : cycles_)
            if (c.frame_rows() != m_ || c.frame_cols() != n_)
                throw input_error("all cycles in a collection must share the frame");
    }

    std::size_t frame_rows() const { return m_; }
    std::size_t frame_cols() const { return n_; }
    const std::vector<orthogonal_cycle>& cycles() const { return cycles_; }

    // Summed weight function over the full (m+1)x(n+1) argument grid,
    // entry (i,j) at index i*(n+1)+j.
    std::vector<long> weight_table() const {
        std::vector<long> t((m_ + 1) * (n_ + 1), 0);
        for (const auto& c : cycles_) detail::add_cycle_masses(c, t, n_ + 1);
        // Suffix sums turn point masses at (u,v) into quadrant counts over u>i, v>j.
        for (std::size_t i = m_ + 1; i-- > 0;)
            for (std::size_t j = n_ + 1; j-- > 0;) {
                long v = t[i * (n_ + 1) + j];
                if (i + 1 <= m_) v += t[(i + 1) * (n_ + 1) + j];
                if (j + 1 <= n_) v += t[i * (n_ + 1) + (j + 1)];
                if (i + 1 <= m_ && j + 1 <= n_) v -= t[(i + 1) * (n_ + 1) + (j + 1)];
                t[i * (n_ + 1) + j] = v;
            }
        // The table now holds counts of masses strictly below/right of (i,j):
        // shift so entry (i,j) = sum over {u > i, v > j}.
        std::vector<long> out((m_ + 1) * (n_ + 1), 0);
        for (std::size_t i = 0; i <= m_; ++i)
            for (std::size_t j = 0; j <= n_; ++j)
                out[i * (n_ + 1) + j] =
                    (i + 1 <= m_ && j + 1 <= n_) ? t[(i + 1) * (n_ + 1) + (j + 1)] : 0;
        return out;
    }

private:
    std::size_t m_, n_;
    std::vector<orthogonal_cycle> cycles_;
};

// A collection is positive when the summed weight function is >= 0
// everywhere and > 0 for at least one pair (i,j).
inline bool collection_is_positive(const cycle_collection& o) {
    std::vector<long> t = o.weight_table();
    bool strict = false;
    for (long v : t) {
        if (v < 0) return false;
        if (v > 0) strict = true;
    }
    return strict;
}

inline bool cycle_is_positive(const orthogonal_cycle& c) {
    return collection_is_positive(cycle_collection(c.frame_rows(), c.frame_cols(), {c}));
}

inline bool orthogonal_cycle::is_two_regular() const {
    std::vector<std::size_t> row_cnt(m_ + 1, 0), col_cnt(n_ + 1, 0);
    std::vector<grid_position> seen(pos_.begin(), pos_.end() - 1);
    for (std::size_t a = 0; a < seen.size(); ++a)
        for (std::size_t b = a + 1; b < seen.size(); ++b)
            if (seen[a] == seen[b]) return false;
    for (const grid_position& p : seen) {
        ++row_cnt[p.row];
        ++col_cnt[p.col];
    }
    for (std::size_t r = 1; r <= m_; ++r)
        if (row_cnt[r] != 2) return false;
    for (std::size_t c = 1; c <= n_; ++c)
        if (col_cnt[c] != 2) return false;
    return true;
}

} // namespace totpos
