#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "totpos/binary_config.hpp"
#include "totpos/matrix.hpp"
#include "totpos/simplex.hpp"

namespace totpos {

// Certificate for the E-matrix system behind the cycle/positivity
// equivalence. Feasible: a concrete E, zero exactly at the 1-positions of
// M, whose second differences d_ij = e_{i+1,j+1} - e_{i+1,j} - e_{i,j+1}
// + e_{i,j} all stay >= margin > 0. Infeasible: nonnegative weights on
// the d-constraints forming a Farkas combination; any E vanishing on the
// 1-positions then has a weighted d-average of zero, so some d <= 0.
//
// The open condition e_ij != 0 at 0-positions is intentionally not
// materialized: any feasible E admits an entrywise perturbation smaller
// than margin/4 at those cells that makes them nonzero while keeping
// every d positive.
struct feasibility_certificate {
    bool feasible = false;
    exact_matrix e;                 // set when feasible
    rational margin;                // set when feasible, > 0
    std::vector<rational> farkas;   // set when infeasible; weight per (i,j) constraint, row-major
};

struct positive_collection_verdict {
    bool exists = false;            // a positive collection of cycles of M exists
    feasibility_certificate certificate;
};

namespace detail {

// Coefficient of e_{p,q} in d_{i,j} (all 0-based): the four corners of
// the unit square at (i,j) carry +1/-1/-1/+1.
inline int second_difference_coeff(std::size_t i, std::size_t j, std::size_t p, std::size_t q) {
    if (p == i && q == j) return 1;
    if (p == i && q == j + 1) return -1;
    if (p == i + 1 && q == j) return -1;
    if (p == i + 1 && q == j + 1) return 1;
    return 0;
}

} // namespace detail

// Decides whether some collection of orthogonal cycles of M is positive,
// via the exact LP dual of the E-matrix system:
//
//   maximize delta  s.t.  d_ij(E) >= delta for all i < m, j < n,
//                         delta <= 1,  e_ij = 0 where M_ij = 1.
//
// Optimum 0 means no valid E exists, which is equivalent to the existence
// of a positive collection; optimum > 0 produces E itself. Free cells are
// split into nonnegative pairs so the zero point is a feasible start, and
// Bland's rule keeps the exact simplex finite.
inline positive_collection_verdict exists_positive_collection(const binary_config& m) {
    const std::size_t rows = m.rows(), cols = m.cols();

    // Structural variables: u,v per free (0-)cell, then delta.
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cell_index;
    for (std::size_t p = 0; p < rows; ++p)
        for (std::size_t q = 0; q < cols; ++q)
            if (!m.get(p, q)) {
                cell_index[{p, q}] = free_cells.size();
                free_cells.emplace_back(p, q);
            }
    const std::size_t nvars = 2 * free_cells.size() + 1;
    const std::size_t delta_col = nvars - 1;

    const std::size_t ncons = (rows - 1) * (cols - 1) + 1;
    std::vector<std::vector<rational>> a(ncons, std::vector<rational>(nvars, rational(0)));
    std::vector<rational> b(ncons, rational(0));
    std::vector<rational> c(nvars, rational(0));
    c[delta_col] = 1;

    std::size_t row = 0;
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t j = 0; j + 1 < cols; ++j, ++row) {
            // delta - d_ij(e) <= 0
            a[row][delta_col] = 1;
            for (int di = 0; di <= 1; ++di)
                for (int dj = 0; dj <= 1; ++dj) {
                    std::size_t p = i + di, q = j + dj;
                    auto it = cell_index.find({p, q});
                    if (it == cell_index.end()) continue; // pinned to zero
                    int coef = detail::second_difference_coeff(i, j, p, q);
                    a[row][2 * it->second] += rational(-coef);     // u part
                    a[row][2 * it->second + 1] += rational(coef);  // v part
                }
        }
    a[row][delta_col] = 1; // delta <= 1
    b[row] = 1;

    lp_result lp = simplex_tableau(a, b, c).solve();

    positive_collection_verdict out;
    if (sign(lp.objective) > 0) {
        out.exists = false;
        out.certificate.feasible = true;
        out.certificate.margin = lp.objective;
        exact_matrix e(rows, cols);
        for (std::size_t idx = 0; idx < free_cells.size(); ++idx)
            e(free_cells[idx].first, free_cells[idx].second) =
                lp.x[2 * idx] - lp.x[2 * idx + 1];
        out.certificate.e = e;
        // Exact recheck of every second difference against the margin.
        for (std::size_t i = 0; i + 1 < rows; ++i)
            for (std::size_t j = 0; j + 1 < cols; ++j) {
                rational d = e(i + 1, j + 1) - e(i + 1, j) - e(i, j + 1) + e(i, j);
                if (d < out.certificate.margin)
                    throw error("internal: certificate margin violated");
            }
    } else {
        out.exists = true;
        out.certificate.feasible = false;
        out.certificate.farkas.assign(lp.y.begin(), lp.y.end() - 1); // drop delta<=1 row
        // Validate the Farkas combination: weights nonnegative with a
        // positive total, and the weighted d-functional vanishes on every
        // free cell, so no E with all d > 0 can exist.
        rational total(0);
        for (const rational& w : out.certificate.farkas) {
            if (sign(w) < 0) throw error("internal: negative Farkas weight");
            total += w;
        }
        if (sign(total) <= 0) throw error("internal: zero Farkas combination");
        for (const auto& [cell, idx] : cell_index) {
            (void)idx;
            rational s(0);
            std::size_t r2 = 0;
            for (std::size_t i = 0; i + 1 < rows; ++i)
                for (std::size_t j = 0; j + 1 < cols; ++j, ++r2)
                    s += out.certificate.farkas[r2] *
                         rational(detail::second_difference_coeff(i, j, cell.first, cell.second));
            if (sign(s) != 0) throw error("internal: Farkas combination does not vanish on free cells");
        }
    }
    return out;
}

} // namespace totpos
