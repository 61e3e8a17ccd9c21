#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "totpos/binary_config.hpp"
#include "totpos/cycles.hpp"
#include "totpos/equal_minors.hpp"
#include "totpos/geometry.hpp"
#include "totpos/matrix.hpp"
#include "totpos/pattern.hpp"

namespace totpos {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

// --- matrix JSON: {"rows": m, "cols": n, "entries": [[...], ...]} ---------
// Entries are integers or strings "p/q" with q > 0; non-canonical forms
// are normalized on read.

inline rational rational_from_json(const json& v) {
    if (v.is_number_integer()) return rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw input_error("matrix entry must be an integer or a rational string");
}

inline json rational_to_json(const rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return json(q.get_num().get_si());
    return json(to_string(q));
}

inline exact_matrix parse_matrix_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw input_error("matrix JSON must have rows, cols, entries");
    std::size_t m = j.at("rows").get<std::size_t>();
    std::size_t n = j.at("cols").get<std::size_t>();
    const json& e = j.at("entries");
    if (!e.is_array() || e.size() != m) throw input_error("entries row count mismatch");
    exact_matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!e[i].is_array() || e[i].size() != n) throw input_error("entries column count mismatch");
        for (std::size_t jj = 0; jj < n; ++jj) a(i, jj) = rational_from_json(e[i][jj]);
    }
    return a;
}

inline json matrix_to_json(const exact_matrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) r.push_back(rational_to_json(a(i, j)));
        rows.push_back(std::move(r));
    }
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

inline exact_matrix load_matrix(const std::string& path) {
    return parse_matrix_json(json::parse(read_file(path), nullptr, true, true));
}

// --- binary configuration text: m lines over {0,1} -------------------------

inline binary_config parse_config_text(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return binary_config::from_lines(lines);
}

inline binary_config load_config(const std::string& path) {
    return parse_config_text(read_file(path));
}

// --- pattern text: tokens "?", "x", or rational literals -------------------

inline partial_pattern parse_pattern_text(const std::string& text) {
    std::vector<std::vector<std::string>> grid;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) grid.push_back(std::move(toks));
    }
    if (grid.empty()) throw input_error("empty pattern file");
    partial_pattern p(grid.size(), grid.front().size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != grid.front().size()) throw input_error("ragged pattern file");
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            const std::string& tok = grid[i][j];
            if (tok == "?") continue;
            if (tok == "x") p.specify(i, j);
            else p.specify(i, j, parse_rational(tok));
        }
    }
    return p;
}

inline partial_pattern load_pattern(const std::string& path) {
    return parse_pattern_text(read_file(path));
}

// --- cycle JSON: list of [row, col] pairs (1-based) -------------------------

inline orthogonal_cycle parse_cycle_json(const json& j, std::size_t frame_rows,
                                         std::size_t frame_cols) {
    if (!j.is_array() || j.size() < 3) throw input_error("cycle JSON must be a list of [row,col]");
    std::vector<grid_position> pos;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw input_error("cycle position must be [row,col]");
        pos.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    }
    std::size_t m = frame_rows, n = frame_cols;
    if (m == 0 || n == 0) {
        for (const auto& p : pos) {
            m = std::max(m, p.row);
            n = std::max(n, p.col);
        }
    }
    return orthogonal_cycle(m, n, std::move(pos));
}

inline json cycle_to_json(const orthogonal_cycle& c) {
    json arr = json::array();
    for (const auto& p : c.positions()) arr.push_back(json::array({p.row, p.col}));
    return arr;
}

// --- arrangement JSON: {"points": [[x,y],...], "lines": [[m,b],...]} -------

inline arrangement parse_arrangement_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("lines"))
        throw input_error("arrangement JSON must have points and lines");
    arrangement arr;
    for (const auto& p : j.at("points")) {
        if (!p.is_array() || p.size() != 2) throw input_error("point must be [x, y]");
        arr.points.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
    for (const auto& l : j.at("lines")) {
        if (!l.is_array() || l.size() != 2) throw input_error("line must be [slope, intercept]");
        arr.lines.push_back({rational_from_json(l[0]), rational_from_json(l[1])});
    }
    return arr;
}

inline json arrangement_to_json(const arrangement& arr) {
    json pts = json::array(), lns = json::array();
    for (const auto& p : arr.points)
        pts.push_back(json::array({rational_to_json(p.x), rational_to_json(p.y)}));
    for (const auto& l : arr.lines)
        lns.push_back(json::array({rational_to_json(l.slope), rational_to_json(l.intercept)}));
    return json{{"points", std::move(pts)}, {"lines", std::move(lns)}};
}

inline arrangement load_arrangement(const std::string& path) {
    return parse_arrangement_json(json::parse(read_file(path), nullptr, true, true));
}

// --- graph file: "n", outer order line, then "u v" chord lines -------------

inline outerplanar_input parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    outerplanar_input g;
    if (!(in >> g.n)) throw input_error("graph file must start with the vertex count");
    g.outer_order.resize(g.n);
    for (auto& v : g.outer_order)
        if (!(in >> v)) throw input_error("graph file outer order is incomplete");
    std::size_t u, w;
    while (in >> u >> w) {
        if (u == w) throw input_error("chord endpoints must differ");
        if (u > w) std::swap(u, w);
        g.chords.insert({u, w});
    }
    return g;
}

inline outerplanar_input load_graph(const std::string& path) {
    return parse_graph_text(read_file(path));
}

} // namespace totpos
