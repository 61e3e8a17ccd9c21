#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "totpos/errors.hpp"

namespace totpos {

// 0-1 matrix: configurations C_x(A), masks, incidence matrices, cycle
// supports. Text form is m lines of n characters from {0,1}.
class binary_config {
public:
    binary_config() = default;

    binary_config(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), bits_(rows * cols, 0) {
        if (rows == 0 || cols == 0) throw input_error("configuration dimensions must be positive");
    }

    static binary_config from_rows(std::initializer_list<std::string> rows) {
        std::vector<std::string> v(rows);
        return from_lines(v);
    }

    static binary_config from_lines(const std::vector<std::string>& lines) {
        if (lines.empty()) throw input_error("configuration dimensions must be positive");
        binary_config m(lines.size(), lines.front().size());
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].size() != m.cols_) throw input_error("ragged configuration text");
            for (std::size_t j = 0; j < m.cols_; ++j) {
                char c = lines[i][j];
                if (c != '0' && c != '1') throw input_error("configuration text must be 0/1");
                m.bits_[i * m.cols_ + j] = (c == '1');
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) { bits_[i * cols_ + j] = v ? 1 : 0; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto b : bits_) w += b;
        return w;
    }

    std::vector<std::size_t> row_sums() const {
        std::vector<std::size_t> r(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += get(i, j);
        return r;
    }

    std::vector<std::size_t> col_sums() const {
        std::vector<std::size_t> c(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) c[j] += get(i, j);
        return c;
    }

    bool operator==(const binary_config& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
    }
    bool operator!=(const binary_config& other) const { return !(*this == other); }

    std::string to_text() const {
        std::string out;
        out.reserve(rows_ * (cols_ + 1));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out.push_back(get(i, j) ? '1' : '0');
            out.push_back('\n');
        }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

} // namespace totpos
