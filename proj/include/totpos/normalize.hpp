#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "totpos/geometry.hpp"
#include "totpos/rng.hpp"

namespace totpos {
namespace detail {

// --- incidence structure of the input ------------------------------------

struct incidence_structure {
    std::vector<std::vector<std::size_t>> lines_of_point;
    std::vector<std::vector<std::size_t>> points_of_line;
    std::size_t max_lines_per_point = 0;
};

inline incidence_structure analyze(const arrangement& arr) {
    incidence_structure s;
    s.lines_of_point.resize(arr.points.size());
    s.points_of_line.resize(arr.lines.size());
    for (std::size_t i = 0; i < arr.points.size(); ++i)
        for (std::size_t j = 0; j < arr.lines.size(); ++j)
            if (incident(arr.points[i], arr.lines[j])) {
                s.lines_of_point[i].push_back(j);
                s.points_of_line[j].push_back(i);
            }
    for (const auto& l : s.lines_of_point)
        s.max_lines_per_point = std::max(s.max_lines_per_point, l.size());
    return s;
}

// --- exact solver for the homogeneous triple-sum system -------------------

// Variables t_j, one per line; each equation t_a + t_b + t_c = 0 comes
// from a point lying on three lines. Returns a reduced row echelon form
// from which pivot variables follow from any assignment of the frees.
struct triple_system {
    std::size_t nvars = 0;
    std::vector<std::vector<rational>> rref; // rows over nvars columns
    std::vector<std::size_t> pivot_col;      // per rref row
    std::vector<std::size_t> free_cols;

    static triple_system build(std::size_t nvars,
                               const std::vector<std::vector<std::size_t>>& triples) {
        triple_system sys;
        sys.nvars = nvars;
        std::vector<std::vector<rational>> rows;
        for (const auto& tr : triples) {
            std::vector<rational> r(nvars, rational(0));
            for (std::size_t j : tr) r[j] += 1;
            rows.push_back(std::move(r));
        }
        // plain Gauss-Jordan over Q
        std::size_t rank = 0;
        for (std::size_t col = 0; col < nvars && rank < rows.size(); ++col) {
            std::size_t pr = rank;
            while (pr < rows.size() && sign(rows[pr][col]) == 0) ++pr;
            if (pr == rows.size()) continue;
            std::swap(rows[rank], rows[pr]);
            rational inv = rows[rank][col];
            for (auto& v : rows[rank]) v /= inv;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || sign(rows[r][col]) == 0) continue;
                rational f = rows[r][col];
                for (std::size_t c = 0; c < nvars; ++c) rows[r][c] -= f * rows[rank][c];
            }
            sys.pivot_col.push_back(col);
            ++rank;
        }
        rows.resize(rank);
        sys.rref = std::move(rows);
        std::set<std::size_t> pivots(sys.pivot_col.begin(), sys.pivot_col.end());
        for (std::size_t c = 0; c < nvars; ++c)
            if (!pivots.count(c)) sys.free_cols.push_back(c);
        return sys;
    }

    // Particular solution from free-variable values, scaled to integers.
    std::vector<bigint> solve(const std::vector<long>& free_vals) const {
        std::vector<rational> t(nvars, rational(0));
        for (std::size_t i = 0; i < free_cols.size(); ++i) t[free_cols[i]] = free_vals[i];
        for (std::size_t r = 0; r < rref.size(); ++r) {
            rational v(0);
            for (std::size_t c : free_cols) v -= rref[r][c] * t[c];
            t[pivot_col[r]] = v;
        }
        bigint den(1);
        for (const auto& v : t) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<bigint> out(nvars);
        for (std::size_t j = 0; j < nvars; ++j)
            out[j] = t[j].get_num() * (den / t[j].get_den());
        return out;
    }
};

// --- dual-curve re-realization --------------------------------------------

// Realizes the input's incidence structure afresh with the lines' dual
// points sitting on an integer curve y = f(x):
//
//   parabola f(t) = t^2        when every point lies on <= 2 lines,
//   cubic    f(t) = t^3 + p t  when points lie on <= 3 lines.
//
// Line j becomes y = t_j x + f(t_j). Two such lines meet at the integer
// abscissa -(t + t') resp. -(t^2 + t t' + t'^2 + p), and a third
// arrangement line passes through that intersection iff its parameter is
// the third root of the chord equation. On the parabola there is no third
// root, so no unwanted triple concurrence can appear anywhere; on the
// cubic the third root is -(t + t'), so prescribed triples are exactly
// the parameter triples summing to zero and every other coincidence can
// be excluded by inspecting the parameter set. Everything stays a small
// integer, which is what keeps the downstream exponent matrix tractable.
struct curve_realization_config {
    int restarts = 48;
    int hill_steps = 200;
    long free_span = 9;
};

inline bool curve_realize_attempt(const arrangement& arr, const incidence_structure& inc,
                                  splitmix64& rng, const curve_realization_config& cfg,
                                  arrangement& out) {
    const std::size_t nlines = arr.lines.size();
    const std::size_t npoints = arr.points.size();
    const bool cubic = inc.max_lines_per_point == 3;

    std::vector<std::vector<std::size_t>> triples;
    if (cubic)
        for (const auto& ls : inc.lines_of_point)
            if (ls.size() == 3) triples.push_back(ls);
    triple_system sys = triple_system::build(nlines, triples);

    // Pairs of lines whose intersection will host a point; used both for
    // the safety conditions and for centering the cubic.
    std::vector<std::pair<std::size_t, std::size_t>> used_pairs;
    for (const auto& ls : inc.lines_of_point)
        if (ls.size() >= 2) used_pairs.emplace_back(ls[0], ls[1]);

    auto pair_norm = [&](const std::vector<bigint>& t, std::size_t a, std::size_t b) {
        bigint n;
        if (cubic) n = t[a] * t[a] + t[a] * t[b] + t[b] * t[b];
        else n = t[a] + t[b];
        return n;
    };

    // Constraint violations of a parameter assignment: repeated slopes, a
    // stray third line through a hosted two-line intersection (cubic only,
    // via the chord's third root), and coinciding x-coordinates among the
    // hosted intersections.
    auto penalty = [&](const std::vector<bigint>& t) -> long {
        long bad = 0;
        std::set<bigint> seen;
        for (const auto& v : t)
            if (!seen.insert(v).second) bad += 100;
        if (cubic) {
            for (const auto& ls : inc.lines_of_point) {
                if (ls.size() != 2) continue;
                bigint third = -(t[ls[0]] + t[ls[1]]);
                if (seen.count(third)) bad += 100;
            }
        }
        std::set<bigint> xs;
        for (auto [a, b] : used_pairs)
            if (!xs.insert(pair_norm(t, a, b)).second) bad += 10;
        return bad;
    };

    auto score = [&](const std::vector<bigint>& t) {
        bigint mx(0);
        for (const auto& v : t) mx = std::max(mx, bigint(abs(v)));
        return mx;
    };

    // Penalty-guided local search over the free variables, then a
    // polishing pass that shrinks max |t| while staying feasible (the
    // cubic's heights grow with the cube of the parameters, so smallness
    // here decides the cost of the downstream exponentiation).
    std::vector<long> frees(sys.free_cols.size());
    std::vector<long> best_free;
    std::vector<bigint> best_t;
    bool feasible = false;
    for (int attempt = 0; attempt < cfg.restarts && !feasible; ++attempt) {
        long span = cfg.free_span + attempt / 4;
        for (auto& f : frees) f = rng.range(-span, span);
        std::vector<bigint> t = sys.solve(frees);
        long pen = penalty(t);
        for (int step = 0; step < cfg.hill_steps && pen > 0; ++step) {
            std::vector<long> cand = frees;
            cand[rng.below(cand.size())] += rng.range(-3, 3);
            std::vector<bigint> t2 = sys.solve(cand);
            long pen2 = penalty(t2);
            if (pen2 <= pen) {
                frees.swap(cand);
                t.swap(t2);
                pen = pen2;
            }
        }
        if (pen == 0) {
            best_free = frees;
            best_t = t;
            feasible = true;
        }
    }
    if (!feasible) return false;
    for (int step = 0; step < cfg.hill_steps; ++step) {
        std::vector<long> cand = best_free;
        cand[rng.below(cand.size())] += rng.range(-2, 2);
        std::vector<bigint> t2 = sys.solve(cand);
        if (penalty(t2) == 0 && score(t2) < score(best_t)) {
            best_free = cand;
            best_t = t2;
        }
    }
    std::vector<bigint> t = best_t;

    // Cubic centering: shift f by p*t so the hosted intersections spread
    // around zero instead of at -t^2 scale.
    bigint p(0);
    if (cubic && !used_pairs.empty()) {
        std::vector<bigint> norms;
        for (auto [a, b] : used_pairs)
            norms.push_back(t[a] * t[a] + t[a] * t[b] + t[b] * t[b]);
        std::sort(norms.begin(), norms.end());
        p = -norms[norms.size() / 2];
    }

    auto f_of = [&](const bigint& v) {
        bigint r;
        if (cubic) r = v * v * v + p * v;
        else r = v * v;
        return r;
    };
    auto meet_x = [&](std::size_t a, std::size_t b) {
        bigint n;
        if (cubic) n = t[a] * t[a] + t[a] * t[b] + t[b] * t[b] + p;
        else n = t[a] + t[b];
        return bigint(-n);
    };

    out.lines.clear();
    out.lines.resize(nlines);
    for (std::size_t j = 0; j < nlines; ++j)
        out.lines[j] = planar_line{rational(t[j]), rational(f_of(t[j]))};

    out.points.assign(npoints, planar_point{});
    std::set<rational> used_x;
    auto line_y = [&](std::size_t j, const rational& x) -> rational {
        return rational(out.lines[j].slope * x + out.lines[j].intercept);
    };

    // Determined points first: intersections of their incident lines.
    for (std::size_t i = 0; i < npoints; ++i) {
        const auto& ls = inc.lines_of_point[i];
        if (ls.size() < 2) continue;
        rational x = rational(meet_x(ls[0], ls[1]));
        rational y = line_y(ls[0], x);
        for (std::size_t j : ls)
            if (line_y(j, x) != y) return false; // prescribed concurrence failed
        if (!used_x.insert(x).second) return false;
        out.points[i] = {x, y};
    }
    // Points on one line: integer abscissas dodging every other line.
    for (std::size_t i = 0; i < npoints; ++i) {
        const auto& ls = inc.lines_of_point[i];
        if (ls.size() != 1) continue;
        const std::size_t j = ls[0];
        std::set<rational> forbidden;
        for (std::size_t j2 = 0; j2 < nlines; ++j2)
            if (j2 != j) forbidden.insert(rational(meet_x(j, j2)));
        bool placed = false;
        long base = rng.range(-8, 8);
        for (long d = 0; d < 4096 && !placed; ++d) {
            long cand = base + ((d % 2 == 0) ? d / 2 : -(d / 2 + 1));
            rational x(cand);
            if (used_x.count(x) || forbidden.count(x)) continue;
            used_x.insert(x);
            out.points[i] = {x, line_y(j, x)};
            placed = true;
        }
        if (!placed) return false;
    }
    // Isolated points: anywhere off every line.
    for (std::size_t i = 0; i < npoints; ++i) {
        if (!inc.lines_of_point[i].empty()) continue;
        bool placed = false;
        long base = rng.range(-8, 8);
        for (long d = 0; d < 4096 && !placed; ++d) {
            long cand = base + ((d % 2 == 0) ? d / 2 : -(d / 2 + 1));
            rational x(cand);
            if (used_x.count(x)) continue;
            for (long dy = 0; dy < 256 && !placed; ++dy) {
                rational y(rng.range(-64, 64));
                bool clean = true;
                for (std::size_t j = 0; j < nlines; ++j)
                    if (line_y(j, x) == y) { clean = false; break; }
                if (clean) {
                    used_x.insert(x);
                    out.points[i] = {x, y};
                    placed = true;
                }
            }
        }
        if (!placed) return false;
    }
    return true;
}

// --- projective fallback ---------------------------------------------------

inline bool projective_attempt(const arrangement& arr, splitmix64& rng, arrangement& out) {
    long e[9];
    for (auto& v : e) v = rng.range(-5, 5);
    bigint t11(e[0]), t12(e[1]), t13(e[2]), t21(e[3]), t22(e[4]), t23(e[5]),
        t31(e[6]), t32(e[7]), t33(e[8]);
    bigint det = t11 * (t22 * t33 - t23 * t32) - t12 * (t21 * t33 - t23 * t31)
               + t13 * (t21 * t32 - t22 * t31);
    if (sign(det) == 0) return false;

    out.points.clear();
    out.lines.clear();
    for (const auto& pnt : arr.points) {
        rational w = rational(t31) * pnt.x + rational(t32) * pnt.y + rational(t33);
        if (sign(w) == 0) return false; // point on the vanishing line
        rational x = (rational(t11) * pnt.x + rational(t12) * pnt.y + rational(t13)) / w;
        rational y = (rational(t21) * pnt.x + rational(t22) * pnt.y + rational(t23)) / w;
        out.points.push_back({x, y});
    }
    // Lines transform by the adjugate transpose of T acting on (m, -1, b).
    bigint c11 = t22 * t33 - t23 * t32, c12 = -(t21 * t33 - t23 * t31), c13 = t21 * t32 - t22 * t31;
    bigint c21 = -(t12 * t33 - t13 * t32), c22 = t11 * t33 - t13 * t31, c23 = -(t11 * t32 - t12 * t31);
    bigint c31 = t12 * t23 - t13 * t22, c32 = -(t11 * t23 - t13 * t21), c33 = t11 * t22 - t12 * t21;
    for (const auto& ln : arr.lines) {
        rational a = rational(c11) * ln.slope - rational(c12) + rational(c13) * ln.intercept;
        rational b = rational(c21) * ln.slope - rational(c22) + rational(c23) * ln.intercept;
        rational c = rational(c31) * ln.slope - rational(c32) + rational(c33) * ln.intercept;
        if (sign(b) == 0) return false; // would be vertical
        out.lines.push_back({-a / b, -c / b});
    }
    return true;
}

} // namespace detail

// Produces an arrangement with the same incidence matrix (same point and
// line indices) satisfying all three general-position predicates. An input
// already in general position is returned unchanged. Otherwise candidate
// realizations are generated deterministically from the seed -- first
// incidence-preserving re-realizations over an integer dual curve, which
// keep coordinates small enough for the exact exponentiation pipeline,
// then random rational projective maps -- and every candidate is verified
// exactly (incidence matrix equality plus the predicates) before being
// accepted. Throws construction_failure when the retry budget runs out.
inline arrangement normalize_general_position(const arrangement& arr, std::uint64_t seed,
                                              int retry_budget = 64) {
    if (general_position(arr).ok()) return arr;
    if (arr.points.empty() || arr.lines.empty())
        throw construction_failure("degenerate arrangement cannot reach general position");

    const binary_config want = incidence_matrix(arr);
    detail::incidence_structure inc = detail::analyze(arr);
    splitmix64 rng(seed ^ 0x67656f6dULL);

    auto accept = [&](const arrangement& cand) {
        return general_position(cand).ok() && incidence_matrix(cand) == want;
    };

    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        arrangement cand;
        bool built = false;
        if (inc.max_lines_per_point <= 3) {
            splitmix64 sub = rng.fork();
            built = detail::curve_realize_attempt(arr, inc, sub, {}, cand);
        }
        if (!built) {
            splitmix64 sub = rng.fork();
            built = detail::projective_attempt(arr, sub, cand);
        }
        if (built && accept(cand)) return cand;
    }
    throw construction_failure("normalization retry budget exhausted");
}

} // namespace totpos
