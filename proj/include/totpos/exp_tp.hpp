#pragma once

#include <cstddef>
#include <vector>

#include "totpos/geometry.hpp"
#include "totpos/hadamard.hpp"
#include "totpos/matrix.hpp"

namespace totpos {

// The TP matrix built from a general-position arrangement, together with
// the sort orders and the exponent data that produced it.
struct exp_matrix_result {
    exact_matrix matrix;                  // TP; entries t^(T * s * a_ij)
    std::vector<std::size_t> point_order; // rows
    std::vector<std::size_t> line_order;  // cols
    bigint scale;                         // s: lcm of distance denominators
    unsigned long hadamard_exponent = 1;  // T from the doubling schedule
};

// Exponentiates the vertical-distance matrix into a totally positive
// matrix whose 1-entries sit exactly at the incidences.
//
// The distances are first scaled by the least common denominator s, which
// is the s-th Hadamard power of the unscaled construction and so keeps
// both the strict second differences and the zero set. Entries t^(s a_ij)
// are exact rationals; the doubling schedule of eventual_tp_exponent then
// lifts the TP2 base matrix to a fully TP power. The scaled second
// differences (slope gap times x gap, both positive after sorting) are
// already positive, so the TP2 precondition holds by construction and the
// classifier merely re-verifies it.
inline exp_matrix_result exp_matrix_tp(const arrangement& arr, const rational& t,
                                       unsigned long cap = 1u << 20) {
    if (!(t > rational(1))) throw input_error("base t must exceed 1");
    vertical_distance_result vd = vertical_distance_matrix(arr); // checks general position

    bigint s = common_denominator(vd.distances.entries());
    const std::size_t m = vd.distances.rows(), n = vd.distances.cols();
    exact_matrix base(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rational e = vd.distances(i, j) * rational(s);
            if (e.get_den() != 1) throw error("internal: scaled exponent not integral");
            if (!e.get_num().fits_slong_p()) throw error("internal: scaled exponent overflow");
            base(i, j) = pow_rational(t, e.get_num().get_si());
        }

    auto exponent = eventual_tp_exponent(base, cap);
    if (!exponent)
        throw construction_failure("Hadamard exponent cap exhausted before reaching TP");

    exp_matrix_result out;
    out.matrix = (*exponent == 1) ? base : hadamard_power(base, *exponent);
    out.point_order = vd.point_order;
    out.line_order = vd.line_order;
    out.scale = s;
    out.hadamard_exponent = *exponent;
    return out;
}

} // namespace totpos
