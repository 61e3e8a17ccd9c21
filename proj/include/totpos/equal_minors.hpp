#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "totpos/classify.hpp"
#include "totpos/matrix.hpp"

namespace totpos {

// Column pairs (1-based, i < j) of a 2xn TP matrix whose 2x2 minor equals
// alpha exactly.
struct alpha_pairs {
    rational alpha;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
};

inline rational two_by_two_minor(const exact_matrix& a, std::size_t i, std::size_t j) {
    // columns i < j, 1-based
    return a(0, i - 1) * a(1, j - 1) - a(0, j - 1) * a(1, i - 1);
}

inline alpha_pairs alpha_set(const exact_matrix& a, const rational& alpha) {
    if (a.rows() != 2) throw input_error("alpha_set expects a 2-by-n matrix");
    if (!is_tp(a)) throw precondition_error("alpha_set expects a TP matrix");
    alpha_pairs out;
    out.alpha = alpha;
    for (std::size_t i = 1; i <= a.cols(); ++i)
        for (std::size_t j = i + 1; j <= a.cols(); ++j)
            if (two_by_two_minor(a, i, j) == alpha) out.pairs.insert({i, j});
    return out;
}

// The two quadruple patterns that can never sit inside one alpha set:
// {(i,j),(i,k),(j,w),(k,w)} and {(i,k),(i,w),(j,k),(j,w)} for
// i < j < k < w. Returns every violating quadruple with its pattern id.
struct quadruple_violation {
    std::size_t i, j, k, w;
    int pattern; // 1 or 2
};

inline std::vector<quadruple_violation>
forbidden_quadruples(const std::set<std::pair<std::size_t, std::size_t>>& pairs, std::size_t n) {
    auto has = [&](std::size_t a, std::size_t b) { return pairs.count({a, b}) != 0; };
    std::vector<quadruple_violation> out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k)
                for (std::size_t w = k + 1; w <= n; ++w) {
                    if (has(i, j) && has(i, k) && has(j, w) && has(k, w))
                        out.push_back({i, j, k, w, 1});
                    if (has(i, k) && has(i, w) && has(j, k) && has(j, w))
                        out.push_back({i, j, k, w, 2});
                }
    return out;
}

// Outerplanar graph given by its embedding: the cyclic outer-face order
// and a set of non-crossing chords (vertex name pairs).
struct outerplanar_input {
    std::size_t n = 0;
    std::vector<std::size_t> outer_order;                      // names, length n
    std::set<std::pair<std::size_t, std::size_t>> chords;      // name pairs
};

namespace detail {

struct polygon_view {
    std::size_t n;
    std::vector<std::size_t> pos_of_name; // 1-based positions along the walk
    std::vector<std::size_t> name_of_pos;
    std::set<std::pair<std::size_t, std::size_t>> pos_chords; // a < b
};

inline polygon_view validate_outerplanar(const outerplanar_input& g) {
    if (g.n < 2) throw input_error("outerplanar input needs at least two vertices");
    if (g.outer_order.size() != g.n) throw input_error("outer face order must list every vertex once");
    polygon_view v;
    v.n = g.n;
    v.pos_of_name.assign(g.n + 1, 0);
    v.name_of_pos.assign(g.n + 1, 0);
    for (std::size_t p = 1; p <= g.n; ++p) {
        std::size_t name = g.outer_order[p - 1];
        if (name < 1 || name > g.n || v.pos_of_name[name] != 0)
            throw input_error("outer face order must be a permutation of 1..n");
        v.pos_of_name[name] = p;
        v.name_of_pos[p] = name;
    }
    for (const auto& [x, y] : g.chords) {
        if (x < 1 || x > g.n || y < 1 || y > g.n || x == y)
            throw input_error("chord endpoints out of range");
        std::size_t a = v.pos_of_name[x], b = v.pos_of_name[y];
        if (a > b) std::swap(a, b);
        if (b == a + 1 || (a == 1 && b == g.n))
            throw input_error("chord duplicates an outer edge");
        if (!v.pos_chords.insert({a, b}).second) throw input_error("duplicate chord");
    }
    for (auto it = v.pos_chords.begin(); it != v.pos_chords.end(); ++it)
        for (auto jt = std::next(it); jt != v.pos_chords.end(); ++jt) {
            auto [a, b] = *it;
            auto [c, d] = *jt;
            bool c_in = a < c && c < b, d_in = a < d && d < b;
            if (c_in != d_in && c != a && c != b && d != a && d != b)
                throw input_error("chords cross in the given embedding");
        }
    return v;
}

// Triangulates the interval whose closing edge is (a, b): walks the face
// incident to that edge (maximal chords first, outer steps otherwise),
// fans it from a, and recurses. Chords are laminar because the input is
// non-crossing, so the walk is well defined.
inline void triangulate_interval(std::size_t a, std::size_t b,
                                 std::set<std::pair<std::size_t, std::size_t>>& chords) {
    if (b <= a + 1) return;
    std::vector<std::size_t> face{a};
    std::size_t cur = a;
    while (cur < b) {
        std::size_t next = cur + 1;
        for (auto it = chords.lower_bound({cur, cur}); it != chords.end() && it->first == cur; ++it)
            if (it->second <= b && !(cur == a && it->second == b))
                next = std::max(next, it->second);
        face.push_back(next);
        cur = next;
    }
    for (std::size_t idx = 2; idx + 1 < face.size(); ++idx) chords.insert({a, face[idx]});
    for (std::size_t idx = 0; idx + 1 < face.size(); ++idx)
        triangulate_interval(face[idx], face[idx + 1], chords);
}

} // namespace detail

// Adds chords until every bounded face is a triangle; the outer face
// order is unchanged and the input chords are kept.
inline outerplanar_input triangulate_outerplanar(const outerplanar_input& g) {
    detail::polygon_view v = detail::validate_outerplanar(g);
    if (g.n <= 3) return g;
    auto chords = v.pos_chords;
    detail::triangulate_interval(1, v.n, chords);
    outerplanar_input out;
    out.n = g.n;
    out.outer_order = g.outer_order;
    for (auto [a, b] : chords) {
        std::size_t x = v.name_of_pos[a], y = v.name_of_pos[b];
        if (x > y) std::swap(x, y);
        out.chords.insert({x, y});
    }
    return out;
}

// A 2xn TP matrix realizing a graph: every edge's column pair carries the
// same 2x2 minor alpha under the labeling.
struct realization {
    exact_matrix matrix;  // 2 x n, TP
    rational alpha;
    std::vector<std::size_t> column_of_vertex; // 1-based columns, index by name (1..n)
    outerplanar_input triangulated;            // the graph actually realized
};

namespace detail {

inline rational col_minor(const std::vector<std::array<rational, 2>>& cols, std::size_t i,
                          std::size_t j) {
    return cols[i][0] * cols[j][1] - cols[j][0] * cols[i][1];
}

} // namespace detail

// Induction of the outerplanar realization: peel degree-2 ears down to a
// base triangle (or edge), then reinsert. An ear whose neighbors carry
// consecutive clockwise labels i, i+1 becomes the column sum inserted
// between them; the wrap-around ear (labels n-1 and 1) needs the first
// and last columns rescaled by 2 and 1/2 until the first dominates
// entrywise, after which the difference column is prepended. Both moves
// preserve every realized minor value, so alpha stays 6 from the base
// matrices all the way up.
inline realization realize_outerplanar(const outerplanar_input& g) {
    outerplanar_input tri = triangulate_outerplanar(g);
    detail::polygon_view v = detail::validate_outerplanar(tri);
    const std::size_t n = g.n;

    // Peel ears (positions). Adjacency on positions: outer cycle + chords.
    std::vector<std::set<std::size_t>> adj(n + 1);
    auto link = [&](std::size_t a, std::size_t b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    for (std::size_t p = 1; p <= n; ++p) link(p, p % n + 1);
    if (n == 2) adj[1] = {2}, adj[2] = {1};
    for (auto [a, b] : v.pos_chords) link(a, b);

    struct ear {
        std::size_t v, u, w; // removed vertex and its two neighbors (positions)
    };
    std::vector<ear> peeled;
    std::set<std::size_t> alive;
    for (std::size_t p = 1; p <= n; ++p) alive.insert(p);
    while (alive.size() > 3) {
        std::size_t pick = 0;
        for (std::size_t p : alive)
            if (adj[p].size() == 2) { pick = p; break; }
        if (pick == 0) throw input_error("embedding is not maximal outerplanar after triangulation");
        auto it = adj[pick].begin();
        std::size_t u = *it++, w = *it;
        if (!adj[u].count(w)) throw input_error("ear neighbors are not adjacent");
        peeled.push_back({pick, u, w});
        adj[u].erase(pick);
        adj[w].erase(pick);
        adj[pick].clear();
        alive.erase(pick);
    }

    // Base realization on the survivors, labeled along the outer walk.
    std::vector<std::size_t> base(alive.begin(), alive.end()); // ascending positions = walk order
    std::vector<std::array<rational, 2>> cols;                 // column vectors, index 0..s-1
    std::map<std::size_t, std::size_t> label;                  // position -> 1-based clockwise label
    if (base.size() == 3) {
        cols = {{rational(1), rational(6)}, {rational(2), rational(18)}, {rational(1), rational(12)}};
    } else {
        cols = {{rational(1), rational(6)}, {rational(2), rational(18)}};
    }
    for (std::size_t idx = 0; idx < base.size(); ++idx) label[base[idx]] = idx + 1;

    const rational alpha(6);
    auto check_rescale_preserves = [&](const std::vector<std::array<rational, 2>>& before,
                                       const std::vector<std::array<rational, 2>>& after) {
        for (std::size_t i = 0; i + 1 < before.size(); ++i)
            for (std::size_t j = i + 1; j < before.size(); ++j)
                if (detail::col_minor(before, i, j) != detail::col_minor(after, i, j))
                    throw error("internal: rescaling changed a 2x2 minor");
    };

    for (std::size_t idx = peeled.size(); idx-- > 0;) {
        const ear& e = peeled[idx];
        const std::size_t s = cols.size();
        std::size_t lu = label[e.u], lw = label[e.w];
        if (lu > lw) std::swap(lu, lw);

        if (lw == lu + 1) {
            // Case a: insert the column sum between consecutive labels.
            std::array<rational, 2> sum{cols[lu - 1][0] + cols[lw - 1][0],
                                        cols[lu - 1][1] + cols[lw - 1][1]};
            cols.insert(cols.begin() + lw - 1, sum);
            for (auto& [pos, lab] : label)
                if (lab >= lw) ++lab;
            label[e.v] = lw;
        } else if (lu == 1 && lw == s) {
            // Case b: rescale until the first column dominates the last.
            auto dominates = [&]() {
                return cols.front()[0] > cols.back()[0] && cols.front()[1] > cols.back()[1];
            };
            while (!dominates()) {
                std::array<rational, 2> p = cols.front(), q = cols.back();
                rational d = detail::col_minor(cols, 0, s - 1);
                std::vector<std::array<rational, 2>> next(cols.size());
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    // coordinates of column i in the (p, q) basis
                    rational k = (cols[i][0] * q[1] - cols[i][1] * q[0]) / d;
                    rational l = (p[0] * cols[i][1] - p[1] * cols[i][0]) / d;
                    next[i] = {k * 2 * p[0] + l * q[0] / 2, k * 2 * p[1] + l * q[1] / 2};
                }
                check_rescale_preserves(cols, next);
                cols.swap(next);
            }
            std::array<rational, 2> diff{cols.front()[0] - cols.back()[0],
                                         cols.front()[1] - cols.back()[1]};
            cols.insert(cols.begin(), diff);
            for (auto& [pos, lab] : label) ++lab;
            label[e.v] = 1;
        } else {
            throw error("internal: ear neighbors do not carry adjacent labels");
        }
    }

    realization out;
    out.alpha = alpha;
    out.triangulated = tri;
    out.matrix = exact_matrix(2, n);
    out.column_of_vertex.assign(n + 1, 0);
    for (std::size_t p = 1; p <= n; ++p) {
        std::size_t col = label[p];
        out.matrix(0, col - 1) = cols[col - 1][0];
        out.matrix(1, col - 1) = cols[col - 1][1];
        out.column_of_vertex[v.name_of_pos[p]] = col;
    }

    classify_result tp = classify(out.matrix, matrix_class::tp());
    if (!tp.member) throw error("internal: realization is not TP");
    for (auto [x, y] : tri.chords) {
        std::size_t a = out.column_of_vertex[x], b = out.column_of_vertex[y];
        if (a > b) std::swap(a, b);
        if (two_by_two_minor(out.matrix, a, b) != alpha)
            throw error("internal: realized chord minor differs from alpha");
    }
    for (std::size_t p = 1; p <= n; ++p) {
        std::size_t x = v.name_of_pos[p], y = v.name_of_pos[p % n + 1];
        std::size_t a = out.column_of_vertex[x], b = out.column_of_vertex[y];
        if (a > b) std::swap(a, b);
        if (n > 2 || p == 1)
            if (two_by_two_minor(out.matrix, a, b) != alpha)
                throw error("internal: realized outer edge minor differs from alpha");
    }
    return out;
}

} // namespace totpos
