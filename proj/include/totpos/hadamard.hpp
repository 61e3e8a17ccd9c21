#pragma once

#include <cstddef>
#include <optional>

#include "totpos/classify.hpp"
#include "totpos/matrix.hpp"

namespace totpos {

// Entrywise t-th power, t >= 0. t = 0 gives the all-ones matrix.
inline exact_matrix hadamard_power(const exact_matrix& a, unsigned long t) {
    exact_matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = pow_rational(a(i, j), static_cast<long>(t));
    return out;
}

// Searches the doubling schedule {1, 2, 4, ...} <= cap for an exponent t
// with A^{(t)} totally positive. A must be entrywise positive and TP2,
// which is exactly the hypothesis under which some Hadamard power is TP;
// anything else is a precondition error. A nullopt return means the cap
// was exhausted, which never refutes eventual total positivity. The
// returned exponent is schedule-minimal, not globally minimal.
inline std::optional<unsigned long> eventual_tp_exponent(const exact_matrix& a, unsigned long cap) {
    if (cap < 1) throw input_error("cap must be positive");
    if (!a.entrywise_positive())
        throw precondition_error("matrix must be entrywise positive");
    {
        classify_result r = classify(a, matrix_class::tp2());
        if (!r.member)
            throw precondition_error("matrix is not TP2, so no Hadamard power is TP");
    }
    for (unsigned long t = 1; t <= cap; t *= 2) {
        if (is_tp(hadamard_power(a, t))) return t;
        if (t > cap / 2) break; // avoid overflow on t *= 2
    }
    return std::nullopt;
}

} // namespace totpos
