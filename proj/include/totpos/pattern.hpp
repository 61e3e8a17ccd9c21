#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "totpos/binary_config.hpp"
#include "totpos/configuration.hpp"
#include "totpos/feasibility.hpp"

namespace totpos {

// Grid of specified/unspecified cells; specified cells may carry data.
// Text form: m lines of whitespace-separated tokens, each "?"
// (unspecified), "x" (specified, no value), or a rational literal.
class partial_pattern {
public:
    struct cell {
        bool specified = false;
        std::optional<rational> value;
    };

    partial_pattern(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols) {
        if (rows == 0 || cols == 0) throw input_error("pattern dimensions must be positive");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const cell& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

    void specify(std::size_t i, std::size_t j, std::optional<rational> v = std::nullopt) {
        cells_[i * cols_ + j] = {true, std::move(v)};
    }
    void unspecify(std::size_t i, std::size_t j) { cells_[i * cols_ + j] = {}; }

    binary_config specified_mask() const {
        binary_config m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j).specified) m.set(i, j, true);
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<cell> cells_;
};

enum class obstruction_verdict { obstructed, no_obstruction };

// Completability obstruction: if some collection of orthogonal cycles of
// the specified positions is positive, the pattern cannot be completed to
// a TP2 matrix (hence not to TP either), for any partial-TP2 data. The
// hypothesis that no 2x2 submatrix is fully specified is required; its
// violation is a precondition error, not a verdict.
inline obstruction_verdict pattern_obstruction(const partial_pattern& p) {
    binary_config mask = p.specified_mask();
    if (auto w = has_all_ones_2x2(mask))
        throw precondition_error("pattern has a fully specified 2x2 submatrix");
    return exists_positive_collection(mask).exists ? obstruction_verdict::obstructed
                                                   : obstruction_verdict::no_obstruction;
}

} // namespace totpos
