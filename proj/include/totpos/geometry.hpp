#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <tuple>
#include <vector>

#include "totpos/binary_config.hpp"
#include "totpos/errors.hpp"
#include "totpos/matrix.hpp"

namespace totpos {

// Finite sets of planar points and non-vertical lines y = m x + b with
// exact rational data. No position assumptions at construction; the
// general-position predicate is a separate report.
struct planar_point {
    rational x, y;
    bool operator==(const planar_point&) const = default;
};

struct planar_line {
    rational slope, intercept;
    bool operator==(const planar_line&) const = default;
};

struct arrangement {
    std::vector<planar_point> points;
    std::vector<planar_line> lines;
};

inline bool incident(const planar_point& p, const planar_line& l) {
    return p.y == l.slope * p.x + l.intercept;
}

// bit (i,j) set iff point i lies on line j, in the given index order.
inline binary_config incidence_matrix(const arrangement& arr) {
    if (arr.points.empty() || arr.lines.empty())
        throw input_error("incidence matrix needs at least one point and one line");
    binary_config m(arr.points.size(), arr.lines.size());
    for (std::size_t i = 0; i < arr.points.size(); ++i)
        for (std::size_t j = 0; j < arr.lines.size(); ++j)
            if (incident(arr.points[i], arr.lines[j])) m.set(i, j, true);
    return m;
}

inline std::size_t incidence_count(const arrangement& arr) {
    std::size_t n = 0;
    for (const auto& p : arr.points)
        for (const auto& l : arr.lines)
            if (incident(p, l)) ++n;
    return n;
}

// distinct x-coordinates, distinct slopes, no vertical line (the last is
// structural in slope-intercept form). All three together admit the
// sorted orderings the vertical-distance construction needs.
struct general_position_report {
    bool distinct_x = true;
    bool distinct_slopes = true;
    bool no_vertical = true;
    bool ok() const { return distinct_x && distinct_slopes && no_vertical; }
};

inline general_position_report general_position(const arrangement& arr) {
    general_position_report r;
    for (std::size_t a = 0; a < arr.points.size() && r.distinct_x; ++a)
        for (std::size_t b = a + 1; b < arr.points.size(); ++b)
            if (arr.points[a].x == arr.points[b].x) { r.distinct_x = false; break; }
    for (std::size_t a = 0; a < arr.lines.size() && r.distinct_slopes; ++a)
        for (std::size_t b = a + 1; b < arr.lines.size(); ++b)
            if (arr.lines[a].slope == arr.lines[b].slope) { r.distinct_slopes = false; break; }
    return r;
}

// Vertical distance matrix of a general-position arrangement: rows are
// the points sorted by increasing x, columns the lines by increasing
// slope, entry a_ij = (m_j x_i + b_j) - y_i. Positive means the point is
// below the line, zero exactly at incidences. The index permutations
// applied to points and lines are returned alongside.
struct vertical_distance_result {
    exact_matrix distances;
    std::vector<std::size_t> point_order; // row r is arr.points[point_order[r]]
    std::vector<std::size_t> line_order;  // col c is arr.lines[line_order[c]]
};

inline vertical_distance_result vertical_distance_matrix(const arrangement& arr) {
    if (arr.points.empty() || arr.lines.empty())
        throw input_error("vertical distances need at least one point and one line");
    if (!general_position(arr).ok())
        throw precondition_error("arrangement is not in general position");

    vertical_distance_result out;
    out.point_order.resize(arr.points.size());
    out.line_order.resize(arr.lines.size());
    std::iota(out.point_order.begin(), out.point_order.end(), std::size_t(0));
    std::iota(out.line_order.begin(), out.line_order.end(), std::size_t(0));
    std::sort(out.point_order.begin(), out.point_order.end(),
              [&](std::size_t a, std::size_t b) { return arr.points[a].x < arr.points[b].x; });
    std::sort(out.line_order.begin(), out.line_order.end(),
              [&](std::size_t a, std::size_t b) { return arr.lines[a].slope < arr.lines[b].slope; });

    out.distances = exact_matrix(arr.points.size(), arr.lines.size());
    for (std::size_t i = 0; i < arr.points.size(); ++i) {
        const planar_point& p = arr.points[out.point_order[i]];
        for (std::size_t j = 0; j < arr.lines.size(); ++j) {
            const planar_line& l = arr.lines[out.line_order[j]];
            out.distances(i, j) = l.slope * p.x + l.intercept - p.y;
        }
    }
    return out;
}

// Extremal incidence generator: points {(a,b) : a in [k], b in [2k^2]}
// and lines {y = m x + c : m in [k], c in [k^2]}. Every line passes
// through exactly k points, giving k^4 incidences from 2k^3 points and
// k^3 lines. Heavily degenerate on purpose (shared x-coordinates and
// slopes); normalize_general_position prepares it for the TP pipeline.
inline arrangement grid_arrangement(std::size_t k) {
    if (k < 1) throw input_error("grid parameter must be positive");
    arrangement arr;
    for (std::size_t a = 1; a <= k; ++a)
        for (std::size_t b = 1; b <= 2 * k * k; ++b)
            arr.points.push_back({rational(static_cast<long>(a)), rational(static_cast<long>(b))});
    for (std::size_t m = 1; m <= k; ++m)
        for (std::size_t c = 1; c <= k * k; ++c)
            arr.lines.push_back({rational(static_cast<long>(m)), rational(static_cast<long>(c))});
    return arr;
}

// (below, above, incident) pair counts over all point-line pairs.
struct above_below_report {
    std::size_t below = 0;    // point strictly below the line: a_ij > 0
    std::size_t above = 0;    // a_ij < 0
    std::size_t incident = 0; // a_ij = 0
};

inline above_below_report above_below_counts(const arrangement& arr) {
    if (!general_position(arr).ok())
        throw precondition_error("arrangement is not in general position");
    above_below_report r;
    for (const auto& p : arr.points)
        for (const auto& l : arr.lines) {
            int s = sign(l.slope * p.x + l.intercept - p.y);
            if (s > 0) ++r.below;
            else if (s < 0) ++r.above;
            else ++r.incident;
        }
    return r;
}

} // namespace totpos
