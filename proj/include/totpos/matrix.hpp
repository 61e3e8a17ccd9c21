#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "totpos/errors.hpp"
#include "totpos/rational.hpp"

namespace totpos {

// Dense matrix of exact rationals, row-major. Immutable by convention once
// built; every algorithm in the library takes it by const reference.
class exact_matrix {
public:
    exact_matrix() = default;

    exact_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, rational(0)) {
        if (rows == 0 || cols == 0) throw input_error("matrix dimensions must be positive");
    }

    exact_matrix(std::initializer_list<std::initializer_list<rational>> init) {
        rows_ = init.size();
        if (rows_ == 0) throw input_error("matrix dimensions must be positive");
        cols_ = init.begin()->size();
        if (cols_ == 0) throw input_error("matrix dimensions must be positive");
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw input_error("ragged initializer for matrix");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    // Convenience for integer literals in tests and fixtures.
    static exact_matrix from_ints(std::initializer_list<std::initializer_list<long>> init) {
        exact_matrix m;
        m.rows_ = init.size();
        if (m.rows_ == 0) throw input_error("matrix dimensions must be positive");
        m.cols_ = init.begin()->size();
        if (m.cols_ == 0) throw input_error("matrix dimensions must be positive");
        m.data_.reserve(m.rows_ * m.cols_);
        for (const auto& row : init) {
            if (row.size() != m.cols_) throw input_error("ragged initializer for matrix");
            for (long v : row) m.data_.emplace_back(v);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const rational& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw input_error("matrix index out of range");
        return data_[i * cols_ + j];
    }

    const std::vector<rational>& entries() const { return data_; }

    bool operator==(const exact_matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const exact_matrix& other) const { return !(*this == other); }

    exact_matrix submatrix(const std::vector<std::size_t>& row_set,
                           const std::vector<std::size_t>& col_set) const {
        exact_matrix s(row_set.size(), col_set.size());
        for (std::size_t a = 0; a < row_set.size(); ++a)
            for (std::size_t b = 0; b < col_set.size(); ++b)
                s(a, b) = at(row_set[a], col_set[b]);
        return s;
    }

    bool entrywise_positive() const {
        for (const rational& v : data_)
            if (sign(v) <= 0) return false;
        return true;
    }

    static exact_matrix identity(std::size_t n) {
        exact_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static exact_matrix constant(std::size_t rows, std::size_t cols, const rational& v) {
        exact_matrix m(rows, cols);
        for (auto& e : m.data_) e = v;
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<rational> data_;
};

} // namespace totpos
