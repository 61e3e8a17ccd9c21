#pragma once

#include <cstddef>
#include <vector>

#include "totpos/matrix.hpp"
#include "totpos/minors.hpp"

namespace totpos {

// k-th compound: the C(m,k) x C(n,k) matrix of all k-by-k minors, with row
// and column index sets ordered lexicographically.
inline exact_matrix kth_compound(const exact_matrix& a, std::size_t k) {
    if (k < 1 || k > std::min(a.rows(), a.cols()))
        throw input_error("compound order out of range");

    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    {
        std::vector<std::size_t> c = detail::first_combination(k);
        do row_sets.push_back(c);
        while (detail::next_combination(c, a.rows()));
        c = detail::first_combination(k);
        do col_sets.push_back(c);
        while (detail::next_combination(c, a.cols()));
    }

    exact_matrix out(row_sets.size(), col_sets.size());
    for (std::size_t i = 0; i < row_sets.size(); ++i)
        for (std::size_t j = 0; j < col_sets.size(); ++j)
            out(i, j) = det(a.submatrix(row_sets[i], col_sets[j]));
    return out;
}

} // namespace totpos
