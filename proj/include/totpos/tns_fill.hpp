#pragma once

#include <cstddef>
#include <cstdint>

#include "totpos/binary_config.hpp"
#include "totpos/classify.hpp"
#include "totpos/configuration.hpp"
#include "totpos/matrix.hpp"
#include "totpos/rng.hpp"

namespace totpos {

// Request for the constructive totally-nonsingular fill: value b at the
// mask's ones, perturbed values inside (b - eps, b + eps) \ {b} at the
// zeros. Defaults follow the module contract: eps = |b|/2, 16 retries.
struct tns_fill_request {
    binary_config mask;
    rational b = rational(1);
    std::uint64_t seed = 0;
    rational eps;                 // <= 0 means use the default |b|/2
    unsigned retry_budget = 16;
};

// Fills a Zarankiewicz-admissible mask (no 2x2 all-ones submatrix) into a
// totally nonsingular matrix A with C_b(A) = mask. The existence argument
// is that the minors of the variable matrix are finitely many nonzero
// polynomials, so their common zero set misses almost every perturbation;
// rejection sampling over a rational lattice inside the eps-ball converts
// that into a certified instance, with the exhaustive TNS check as the
// verifier. Exhausting the budget is reported as a failure, never as a
// refutation.
inline exact_matrix fill_to_tns(const tns_fill_request& req) {
    if (sign(req.b) == 0) throw input_error("fill value b must be nonzero");
    if (req.retry_budget == 0) throw input_error("retry budget must be positive");
    if (has_all_ones_2x2(req.mask))
        throw precondition_error("mask has a 2x2 all-ones submatrix; no TNS fill exists");

    rational eps = req.eps;
    if (sign(eps) <= 0) {
        eps = abs(req.b) / 2;
    }

    const std::size_t m = req.mask.rows(), n = req.mask.cols();
    splitmix64 rng(req.seed ^ 0x746e73ULL);

    // Perturbations b + eps * r / L with r in [-(L-1), L-1] \ {0}; the
    // lattice is dense enough that a handful of draws escapes the minors'
    // zero set.
    const long lattice = 1024;
    for (unsigned attempt = 0; attempt < req.retry_budget; ++attempt) {
        exact_matrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (req.mask.get(i, j)) {
                    a(i, j) = req.b;
                } else {
                    long r = rng.range(1, lattice - 1);
                    if (rng.below(2)) r = -r;
                    a(i, j) = req.b + eps * rational(r, lattice);
                }
            }
        if (classify(a, matrix_class::tns()).member) {
            if (configuration(a, req.b) != req.mask)
                throw error("internal: perturbed entry collided with b");
            return a;
        }
    }
    throw construction_failure("TNS fill retry budget exhausted");
}

} // namespace totpos
