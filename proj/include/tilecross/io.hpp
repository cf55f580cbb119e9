#pragma once

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tilecross/crossing.hpp"
#include "tilecross/limits.hpp"
#include "tilecross/multigraph.hpp"
#include "tilecross/reduce.hpp"
#include "tilecross/tile.hpp"

namespace tilecross {

/// Any defect in an input file: syntax errors carry line/column, schema
/// errors name the offending key or index.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace io_detail {

using ordered_json = nlohmann::ordered_json;

inline std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte);
        throw ParseError("parse error at line " + std::to_string(line) +
                         ", column " + std::to_string(col) + ": " + e.what());
    }
}

inline void check_keys(const ordered_json& j,
                       const std::vector<std::string>& required,
                       const std::vector<std::string>& optional) {
    if (!j.is_object()) throw ParseError("top level must be an object");
    for (const std::string& k : required)
        if (!j.contains(k)) throw ParseError("missing key \"" + k + "\"");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const std::string& k : required)
            if (key == k) known = true;
        for (const std::string& k : optional)
            if (key == k) known = true;
        if (!known) throw ParseError("unknown key \"" + key + "\"");
    }
}

inline int get_count(const ordered_json& j, const std::string& key) {
    const ordered_json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError("\"" + key + "\" must be a non-negative integer");
    return static_cast<int>(v.get<long long>());
}

inline MultiGraph graph_from_json(const ordered_json& j) {
    int n = get_count(j, "vertices");
    const ordered_json& edges = j.at("edges");
    if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
    MultiGraph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const ordered_json& e = edges[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("edges[" + std::to_string(i) +
                             "] must be a pair of integers");
        long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edges[" + std::to_string(i) +
                             "] endpoint out of range (vertices: " +
                             std::to_string(n) + ")");
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return g;
}

inline std::vector<VertexId> boundary_from_json(const ordered_json& j,
                                                const std::string& key, int n) {
    const ordered_json& a = j.at(key);
    if (!a.is_array()) throw ParseError("\"" + key + "\" must be an array");
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number_integer())
            throw ParseError(key + "[" + std::to_string(i) + "] must be an integer");
        long long v = a[i].get<long long>();
        if (v < 0 || v >= n)
            throw ParseError(key + "[" + std::to_string(i) +
                             "] out of range (vertices: " + std::to_string(n) + ")");
        out.push_back(static_cast<VertexId>(v));
    }
    return out;
}

inline ordered_json graph_to_json(const MultiGraph& g) {
    ordered_json j;
    j["vertices"] = g.vertex_count();
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

inline ordered_json tile_to_json(const Tile& t) {
    ordered_json j = graph_to_json(t.graph);
    j["A"] = t.A;
    j["B"] = t.B;
    return j;
}

inline std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

inline std::string rational_str(const Rational& q) {
    std::ostringstream s;
    s << q;
    return s.str();
}

inline ordered_json walk_to_json(const Walk& w) {
    ordered_json j;
    j["vertices"] = w.vertices;
    j["edges"] = w.edges;
    return j;
}

}  // namespace io_detail

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

/// {"vertices": N, "edges": [[u,v],...]}; edge id = array index. Boundary
/// and label keys of richer files are tolerated and ignored.
inline MultiGraph parse_graph(const std::string& text) {
    io_detail::ordered_json j = io_detail::parse_json(text);
    io_detail::check_keys(j, {"vertices", "edges"}, {"A", "B", "labels"});
    return io_detail::graph_from_json(j);
}

/// Adds "A" and "B" to the graph format.
inline Tile parse_tile(const std::string& text) {
    io_detail::ordered_json j = io_detail::parse_json(text);
    io_detail::check_keys(j, {"vertices", "edges", "A", "B"}, {"labels"});
    Tile t;
    t.graph = io_detail::graph_from_json(j);
    t.A = io_detail::boundary_from_json(j, "A", t.graph.vertex_count());
    t.B = io_detail::boundary_from_json(j, "B", t.graph.vertex_count());
    if (t.A.size() != t.B.size())
        throw ParseError("\"A\" and \"B\" lengths differ (" +
                         std::to_string(t.A.size()) + " vs " +
                         std::to_string(t.B.size()) + ")");
    return t;
}

/// Per-edge labels of a closure export, when present.
inline std::optional<std::vector<EdgeLabel>> parse_labels(const std::string& text) {
    io_detail::ordered_json j = io_detail::parse_json(text);
    if (!j.is_object() || !j.contains("labels")) return std::nullopt;
    const io_detail::ordered_json& ls = j.at("labels");
    if (!ls.is_array()) throw ParseError("\"labels\" must be an array");
    std::vector<EdgeLabel> out;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const io_detail::ordered_json& l = ls[i];
        if (!l.is_object() || !l.contains("kind") || !l.contains("copy") ||
            !l.at("kind").is_string() || !l.at("copy").is_number_integer())
            throw ParseError("labels[" + std::to_string(i) +
                             "] must be {\"kind\", \"copy\"}");
        std::string kind = l.at("kind").get<std::string>();
        EdgeLabel label;
        if (kind == "internal")
            label.kind = EdgeKind::Internal;
        else if (kind == "external")
            label.kind = EdgeKind::External;
        else
            throw ParseError("labels[" + std::to_string(i) + "] unknown kind \"" +
                             kind + "\"");
        label.copy = l.at("copy").get<int>();
        out.push_back(label);
    }
    return out;
}

inline std::string serialize(const MultiGraph& g) {
    return io_detail::dump(io_detail::graph_to_json(g));
}

inline std::string serialize(const Tile& t) {
    return io_detail::dump(io_detail::tile_to_json(t));
}

inline std::string serialize(const CycGraph& c) {
    io_detail::ordered_json j = io_detail::graph_to_json(c.graph);
    io_detail::ordered_json labels = io_detail::ordered_json::array();
    for (const EdgeLabel& l : c.edge_label) {
        io_detail::ordered_json lj;
        lj["kind"] = l.kind == EdgeKind::Internal ? "internal" : "external";
        lj["copy"] = l.copy;
        labels.push_back(std::move(lj));
    }
    j["labels"] = std::move(labels);
    return io_detail::dump(j);
}

/// {"value": k, "crossings": [[e1,e2],...], "order": {edge: [indices]}}
inline std::string serialize(const Planarization& p) {
    io_detail::ordered_json j;
    j["value"] = p.crossings.size();
    io_detail::ordered_json crossings = io_detail::ordered_json::array();
    for (auto [e, f] : p.crossings) crossings.push_back({e, f});
    j["crossings"] = std::move(crossings);
    io_detail::ordered_json order = io_detail::ordered_json::object();
    for (const auto& [e, idx] : p.order) order[std::to_string(e)] = idx;
    j["order"] = std::move(order);
    return io_detail::dump(j);
}

inline std::string serialize(const WeakLinkResult& w) {
    io_detail::ordered_json j;
    j["tile"] = io_detail::tile_to_json(w.tile);
    j["permutation"] = w.permutation;
    io_detail::ordered_json paths = io_detail::ordered_json::array();
    for (const Walk& p : w.path_system.paths)
        paths.push_back(io_detail::walk_to_json(p));
    j["paths"] = std::move(paths);
    io_detail::ordered_json steps = io_detail::ordered_json::array();
    for (const CutStep& s : w.steps) {
        io_detail::ordered_json sj;
        sj["cut"] = s.cut;
        sj["removed"] = s.removed;
        sj["u"] = s.u;
        sj["v"] = s.v;
        sj["width_before"] = s.width_before;
        sj["width_after"] = s.width_after;
        steps.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps);
    return io_detail::dump(j);
}

inline std::string serialize(const Decomposition& d) {
    io_detail::ordered_json j;
    j["m"] = d.m;
    j["reduced_tile"] = io_detail::tile_to_json(d.link.tile);
    io_detail::ordered_json subs = io_detail::ordered_json::array();
    for (const Tile& t : d.subtiles) subs.push_back(io_detail::tile_to_json(t));
    j["subtiles"] = std::move(subs);
    j["permutation"] = d.component_permutation;
    io_detail::ordered_json cycles = io_detail::ordered_json::array();
    for (const CycleRep& c : d.cycles) {
        io_detail::ordered_json cj;
        cj["length"] = c.length;
        cj["rep"] = c.rep;
        cj["tile"] = io_detail::tile_to_json(c.tile);
        cycles.push_back(std::move(cj));
    }
    j["cycles"] = std::move(cycles);
    return io_detail::dump(j);
}

inline std::string serialize(const ConstantLedger& l) {
    io_detail::ordered_json j;
    j["epsilon"] = io_detail::rational_str(l.epsilon);
    j["epsilon1"] = io_detail::rational_str(l.epsilon1);
    j["k"] = l.k;
    j["edges"] = l.edges;
    j["M"] = l.M.str();
    j["n2"] = io_detail::rational_str(l.n2);
    j["a0"] = io_detail::rational_str(l.a0);
    j["alpha_d"] = io_detail::rational_str(l.alpha_d);
    j["alpha_u"] = io_detail::rational_str(l.alpha_u);
    j["beta_d"] = io_detail::rational_str(l.beta_d);
    j["beta_u"] = io_detail::rational_str(l.beta_u);
    j["c_d"] = io_detail::rational_str(l.c_d);
    j["c_u"] = io_detail::rational_str(l.c_u);
    j["q0_d"] = io_detail::rational_str(l.q0_d);
    j["q0_u"] = io_detail::rational_str(l.q0_u);
    j["n0_d"] = l.n0_d.str();
    j["n0_u"] = l.n0_u.str();
    j["q_u"] = io_detail::rational_str(l.q_u);
    j["n1_u"] = l.n1_u.str();
    j["N"] = l.N.str();
    return io_detail::dump(j);
}

inline std::string serialize(const BoundReport& r) {
    io_detail::ordered_json j;
    j["tile"] = r.tile_id;
    io_detail::ordered_json table = io_detail::ordered_json::array();
    for (const BoundEntry& e : r.table) {
        io_detail::ordered_json ej;
        ej["n"] = e.n;
        if (e.cyc_crossings) {
            ej["c_n"] = *e.cyc_crossings;
            io_detail::ordered_json w = io_detail::ordered_json::array();
            for (auto [a, b] : e.cyc_witness) w.push_back({a, b});
            ej["c_witness"] = std::move(w);
        } else {
            ej["c_n"] = nullptr;
        }
        if (e.tile_crossings) {
            ej["t_n"] = *e.tile_crossings;
            io_detail::ordered_json w = io_detail::ordered_json::array();
            for (auto [a, b] : e.tile_witness) w.push_back({a, b});
            ej["t_witness"] = std::move(w);
        } else {
            ej["t_n"] = nullptr;
        }
        table.push_back(std::move(ej));
    }
    j["table"] = std::move(table);
    j["certified_upper"] =
        r.certified_upper ? io_detail::ordered_json(io_detail::rational_str(
                                *r.certified_upper))
                          : io_detail::ordered_json(nullptr);
    j["decomposition_upper"] =
        r.decomposition_upper ? io_detail::ordered_json(io_detail::rational_str(
                                    *r.decomposition_upper))
                              : io_detail::ordered_json(nullptr);
    j["best_upper"] = r.best_upper() ? io_detail::ordered_json(io_detail::rational_str(
                                           *r.best_upper()))
                                     : io_detail::ordered_json(nullptr);
    io_detail::ordered_json cands = io_detail::ordered_json::array();
    for (const LowerCandidate& c : r.lower_candidates) {
        io_detail::ordered_json cj;
        cj["n"] = c.n;
        cj["eps"] = io_detail::rational_str(c.eps);
        cj["value"] = io_detail::rational_str(c.value);
        cj["required_n"] = c.required_n.str();
        cj["binding"] = c.binding;
        cands.push_back(std::move(cj));
    }
    j["lower_candidates"] = std::move(cands);
    j["notes"] = r.notes;
    return io_detail::dump(j);
}

namespace io_detail {

// Base 10 regardless of leading zeros, unlike the cpp_int string constructor.
inline Integer parse_decimal(const std::string& s, const std::string& whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
    if (i == s.size()) throw ParseError("malformed number \"" + whole + "\"");
    Integer value = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("malformed number \"" + whole + "\"");
        value = value * 10 + (s[i] - '0');
    }
    return negative ? -value : value;
}

}  // namespace io_detail

/// Accepts "p/q", a plain integer, or a decimal like "0.25"; always exact.
inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num = io_detail::parse_decimal(s.substr(0, slash), text);
        Integer den = io_detail::parse_decimal(s.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        Integer num = io_detail::parse_decimal(digits, text);
        Integer den = 1;
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        return Rational(num, den);
    }
    return Rational(io_detail::parse_decimal(s, text));
}

}  // namespace tilecross
