#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "totpos/matrix.hpp"
#include "totpos/rng.hpp"

namespace totpos {

// Deterministic TP test-fixture generator: a complete product of
// entrywise-nonnegative elementary bidiagonal factors with positive
// parameters, times a positive diagonal. With every parameter positive the
// product of the full staircase word is strictly totally positive; the
// test suite re-verifies each emitted matrix with classify.
//
// Rectangular matrices are the leading m-by-n block of the square
// construction (any submatrix of a TP matrix is TP).
inline exact_matrix random_tp(std::size_t m, std::size_t n, std::uint64_t seed) {
    if (m == 0 || n == 0) throw input_error("matrix dimensions must be positive");
    const std::size_t N = std::max(m, n);
    splitmix64 rng(seed ^ 0x746f74706f73ULL);

    auto draw = [&]() {
        long num = rng.range(1, 6);
        long den = rng.range(1, 3);
        return rational(num, den);
    };

    exact_matrix a(N, N);
    for (std::size_t i = 0; i < N; ++i) a(i, i) = draw();

    // Staircase word [N..2][N..3]...[N]: a reduced word for the longest
    // permutation, used for both triangular parts. A product over it with
    // all parameters positive, around a positive diagonal, is the
    // classical parametrization of the strictly TP matrices.
    std::vector<std::size_t> word;
    for (std::size_t k = 1; k + 1 <= N; ++k)
        for (std::size_t i = N; i >= k + 1; --i) word.push_back(i);
    const std::vector<std::size_t>& lower_word = word;
    const std::vector<std::size_t>& upper_word = word;

    // D * W_U: right-multiplications in word order; U_j adds col_{j-1} into col_j.
    for (std::size_t j1 : upper_word) {
        const std::size_t j = j1 - 1;
        rational s = draw();
        for (std::size_t r = 0; r < N; ++r) a(r, j) += s * a(r, j - 1);
    }
    // W_L * (D W_U): left-multiplications, so the rightmost factor acts first.
    for (std::size_t idx = lower_word.size(); idx-- > 0;) {
        const std::size_t i = lower_word[idx] - 1;
        rational t = draw();
        for (std::size_t c = 0; c < N; ++c) a(i, c) += t * a(i - 1, c);
    }

    if (m == N && n == N) return a;
    exact_matrix out(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
    return out;
}

} // namespace totpos
