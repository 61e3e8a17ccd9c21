// Independent reference implementations used to validate the library's
// fast paths. Everything here recomputes from first principles: Laplace
// cofactor determinants instead of fraction-free elimination, exhaustive
// subset scans instead of contiguous certificates, and a direct search
// over cycle collections instead of the LP.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "totpos/binary_config.hpp"
#include "totpos/cycles.hpp"
#include "totpos/matrix.hpp"
#include "totpos/minors.hpp"
#include "totpos/rng.hpp"

namespace oracles {

using totpos::bigint;
using totpos::binary_config;
using totpos::exact_matrix;
using totpos::grid_position;
using totpos::orthogonal_cycle;
using totpos::rational;

// Cofactor-expansion determinant; deliberately naive.
inline rational laplace_det(const exact_matrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    rational sum(0);
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        cols.clear();
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        rational term = a(0, j) * laplace_det(a.submatrix(rows, cols));
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

// All minors of order <= max_order satisfy pred?
template <typename Pred>
bool every_minor(const exact_matrix& a, std::size_t max_order, Pred&& pred) {
    const std::size_t kmax = std::min({max_order, a.rows(), a.cols()});
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::size_t> rows = totpos::detail::first_combination(k);
        do {
            std::vector<std::size_t> cols = totpos::detail::first_combination(k);
            do {
                if (!pred(laplace_det(a.submatrix(rows, cols)))) return false;
            } while (totpos::detail::next_combination(cols, a.cols()));
        } while (totpos::detail::next_combination(rows, a.rows()));
    }
    return true;
}

inline bool exhaustive_is_tp(const exact_matrix& a) {
    return every_minor(a, std::min(a.rows(), a.cols()),
                       [](const rational& v) { return totpos::sign(v) > 0; });
}

inline bool exhaustive_is_tpk(const exact_matrix& a, std::size_t k) {
    return every_minor(a, k, [](const rational& v) { return totpos::sign(v) > 0; });
}

inline bool exhaustive_is_tn(const exact_matrix& a) {
    return every_minor(a, std::min(a.rows(), a.cols()),
                       [](const rational& v) { return totpos::sign(v) >= 0; });
}

inline bool exhaustive_is_tns(const exact_matrix& a) {
    return every_minor(a, std::min(a.rows(), a.cols()),
                       [](const rational& v) { return totpos::sign(v) != 0; });
}

// --- simple-cycle enumeration and bounded collection search -----------------

// All oriented simple orthogonal cycles supported on the ones of m:
// closed alternating row/column walks with distinct positions. Each
// undirected support appears once per traversal direction.
inline std::vector<orthogonal_cycle> simple_cycles(const binary_config& m) {
    std::vector<grid_position> ones;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) ones.push_back({i + 1, j + 1});

    std::vector<orthogonal_cycle> out;
    std::vector<grid_position> path;
    std::vector<bool> used(ones.size(), false);

    // Walks start with a row move. Even rotations of one oriented cycle
    // share the weight function, so each cycle is emitted once, in the
    // rotation whose start is its least even-indexed position; the two
    // traversal directions have disjoint even-position sets and are both
    // produced.
    auto search = [&](auto&& self, std::size_t start, std::size_t cur, bool row_move) -> void {
        for (std::size_t nxt = 0; nxt < ones.size(); ++nxt) {
            if (nxt == cur) continue;
            const bool joins = row_move ? ones[nxt].row == ones[cur].row
                                        : ones[nxt].col == ones[cur].col;
            if (!joins) continue;
            if (nxt == start) {
                // closing move must be a column move back into p0
                if (!row_move && path.size() >= 4 && path.size() % 2 == 0) {
                    std::vector<grid_position> cyc = path;
                    cyc.push_back(ones[start]);
                    out.emplace_back(m.rows(), m.cols(), cyc);
                }
                continue;
            }
            if (used[nxt]) continue;
            const bool even_index = path.size() % 2 == 0;
            if (even_index && ones[nxt] < ones[start]) continue;
            used[nxt] = true;
            path.push_back(ones[nxt]);
            self(self, start, nxt, !row_move);
            path.pop_back();
            used[nxt] = false;
        }
    };

    for (std::size_t s = 0; s < ones.size(); ++s) {
        used[s] = true;
        path = {ones[s]};
        search(search, s, s, true);
        used[s] = false;
    }
    return out;
}

// Does some multiset of simple cycles (per-cycle multiplicity <= per_cycle_cap)
// form a positive collection? Iterative deepening on the total number of
// cycles used, exhausting all combinations at each depth. A positive
// verdict always carries an explicitly verified collection.
inline bool bounded_positive_collection_search(const binary_config& m, std::size_t per_cycle_cap = 2,
                                               std::size_t total_cap = 4) {
    std::vector<orthogonal_cycle> cycles = simple_cycles(m);
    if (cycles.empty()) return false;

    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t cells = (rows + 1) * (cols + 1);
    std::vector<std::vector<long>> tables;
    for (const auto& c : cycles) {
        totpos::cycle_collection cc(rows, cols, {c});
        tables.push_back(cc.weight_table());
    }

    std::vector<long> sum(cells, 0);
    std::vector<std::size_t> mult(cycles.size(), 0);

    auto positive = [&]() {
        bool strict = false;
        for (long v : sum) {
            if (v < 0) return false;
            if (v > 0) strict = true;
        }
        return strict;
    };

    auto dfs = [&](auto&& self, std::size_t from, std::size_t remaining) -> bool {
        if (positive()) return true;
        if (remaining == 0) return false;
        for (std::size_t c = from; c < cycles.size(); ++c) {
            if (mult[c] >= per_cycle_cap) continue;
            ++mult[c];
            for (std::size_t i = 0; i < cells; ++i) sum[i] += tables[c][i];
            if (self(self, c, remaining - 1)) return true;
            for (std::size_t i = 0; i < cells; ++i) sum[i] -= tables[c][i];
            --mult[c];
        }
        return false;
    };

    for (std::size_t depth = 1; depth <= total_cap; ++depth)
        if (dfs(dfs, 0, depth)) return true;
    return false;
}

} // namespace oracles
