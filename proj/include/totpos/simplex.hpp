#pragma once

#include <cstddef>
#include <vector>

#include "totpos/errors.hpp"
#include "totpos/rational.hpp"

namespace totpos {

// Dense exact-rational primal simplex for
//     maximize c^T x  subject to  A x <= b,  x >= 0,
// restricted to b >= 0 so the slack basis is feasible from the start.
// Bland's rule on both the entering and leaving choice rules out cycling,
// so termination is unconditional. Small and dense on purpose: every
// instance in this library has a few dozen rows.
struct lp_result {
    rational objective;
    std::vector<rational> x; // primal values per structural variable
    std::vector<rational> y; // dual values per constraint, >= 0 at optimum
};

class simplex_tableau {
public:
    simplex_tableau(const std::vector<std::vector<rational>>& a,
                    const std::vector<rational>& b,
                    const std::vector<rational>& c)
        : rows_(a.size()), vars_(c.size()) {
        for (const auto& bi : b)
            if (sign(bi) < 0) throw input_error("simplex requires b >= 0");
        if (b.size() != rows_) throw input_error("simplex dimension mismatch");
        cols_ = vars_ + rows_ + 1; // structurals, slacks, rhs
        t_.assign(rows_, std::vector<rational>(cols_, rational(0)));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (a[i].size() != vars_) throw input_error("simplex dimension mismatch");
            for (std::size_t j = 0; j < vars_; ++j) t_[i][j] = a[i][j];
            t_[i][vars_ + i] = 1;
            t_[i][cols_ - 1] = b[i];
        }
        z_.assign(cols_, rational(0));
        for (std::size_t j = 0; j < vars_; ++j) z_[j] = -c[j];
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) basis_[i] = vars_ + i;
    }

    lp_result solve() {
        for (;;) {
            std::size_t enter = cols_ - 1;
            for (std::size_t j = 0; j + 1 < cols_; ++j)
                if (sign(z_[j]) < 0) { enter = j; break; } // Bland: least index
            if (enter == cols_ - 1) break;                 // optimal

            std::size_t leave = rows_;
            rational best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (sign(t_[i][enter]) <= 0) continue;
                rational ratio = t_[i][cols_ - 1] / t_[i][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_)
                throw error("linear program is unbounded"); // impossible for this library's instances
            pivot(leave, enter);
        }

        lp_result r;
        r.objective = z_[cols_ - 1]; // z-row rhs carries c_B B^{-1} b

        r.x.assign(vars_, rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < vars_) r.x[basis_[i]] = t_[i][cols_ - 1];
        r.y.assign(rows_, rational(0));
        for (std::size_t i = 0; i < rows_; ++i) r.y[i] = z_[vars_ + i];
        return r;
    }

private:
    void pivot(std::size_t pr, std::size_t pc) {
        rational p = t_[pr][pc];
        for (auto& v : t_[pr]) v /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pr || sign(t_[i][pc]) == 0) continue;
            rational f = t_[i][pc];
            for (std::size_t j = 0; j < cols_; ++j) t_[i][j] -= f * t_[pr][j];
        }
        if (sign(z_[pc]) != 0) {
            rational f = z_[pc];
            for (std::size_t j = 0; j < cols_; ++j) z_[j] -= f * t_[pr][j];
        }
        basis_[pr] = pc;
    }

    std::size_t rows_, vars_, cols_;
    std::vector<std::vector<rational>> t_;
    std::vector<rational> z_;
    std::vector<std::size_t> basis_;
};

} // namespace totpos
