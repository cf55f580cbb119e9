#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tilecross/multigraph.hpp"

namespace tilecross {

/// Minimum s-t edge cut. `edges` crosses from side_s to the rest; removing
/// them disconnects s from t and no proper subset does.
struct EdgeCut {
    std::vector<EdgeId> edges;
    std::vector<VertexId> side_s;
    int size() const { return static_cast<int>(edges.size()); }
};

/// A walk: vertices.size() == edges.size() + 1, edge i joins vertices i and
/// i+1. A single-vertex walk has no edges.
struct Walk {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

struct PathSystem {
    std::vector<Walk> paths;
};

namespace flow_detail {

// Unit-capacity flow state on an undirected multigraph. flow[e] is +1 when
// one unit runs from endpoints(e).first to .second, -1 for the reverse.
struct UnitFlow {
    const MultiGraph& g;
    std::vector<int> flow;

    explicit UnitFlow(const MultiGraph& g) : g(g), flow(g.edge_count(), 0) {}

    // One BFS augmentation, scanning incident edges in ascending id order.
    bool augment(VertexId s, VertexId t) {
        const int n = g.vertex_count();
        std::vector<EdgeId> pred_edge(n, -1);
        std::vector<VertexId> pred_vertex(n, -1);
        std::vector<char> seen(n, 0);
        std::queue<VertexId> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty() && !seen[t]) {
            VertexId v = q.front();
            q.pop();
            for (auto [w, e] : g.incidence()[v]) {
                if (seen[w] || w == v) continue;
                int dir = (g.endpoints(e).first == v) ? 1 : -1;
                if (flow[e] == dir) continue;  // saturated this way
                seen[w] = 1;
                pred_edge[w] = e;
                pred_vertex[w] = v;
                q.push(w);
            }
        }
        if (!seen[t]) return false;
        for (VertexId v = t; v != s; v = pred_vertex[v]) {
            EdgeId e = pred_edge[v];
            flow[e] += (g.endpoints(e).second == v) ? 1 : -1;
        }
        return true;
    }

    std::vector<VertexId> residual_side(VertexId s) const {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<VertexId> side;
        std::queue<VertexId> q;
        seen[s] = 1;
        q.push(s);
        side.push_back(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (auto [w, e] : g.incidence()[v]) {
                if (seen[w] || w == v) continue;
                int dir = (g.endpoints(e).first == v) ? 1 : -1;
                if (flow[e] == dir) continue;
                seen[w] = 1;
                side.push_back(w);
                q.push(w);
            }
        }
        std::sort(side.begin(), side.end());
        return side;
    }

    // Peels value-many edge-disjoint s-t paths off the flow. Walks pick the
    // unused out-arc of smallest edge id; revisiting a vertex erases the
    // flow cycle just traversed (its arcs stay consumed).
    std::vector<Walk> decompose(VertexId s, VertexId t, int value) const {
        const int n = g.vertex_count();
        std::vector<std::vector<std::pair<VertexId, EdgeId>>> out(n);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (flow[e] == 0 || g.is_loop(e)) continue;
            auto [u, v] = g.endpoints(e);
            if (flow[e] > 0)
                out[u].emplace_back(v, e);
            else
                out[v].emplace_back(u, e);
        }
        for (auto& lst : out)
            std::sort(lst.begin(), lst.end(),
                      [](auto a, auto b) { return a.second < b.second; });
        std::vector<std::size_t> next(n, 0);
        std::vector<Walk> walks;
        for (int i = 0; i < value; ++i) {
            Walk w;
            w.vertices.push_back(s);
            std::vector<int> pos_in_walk(n, -1);
            pos_in_walk[s] = 0;
            VertexId v = s;
            while (v != t) {
                auto& lst = out[v];
                if (next[v] >= lst.size())
                    throw std::logic_error("flow decomposition ran dry");
                auto [w2, e] = lst[next[v]++];
                if (pos_in_walk[w2] >= 0) {
                    // Collapse the cycle; the arcs consumed along it cancel
                    // out of the flow.
                    int keep = pos_in_walk[w2];
                    for (std::size_t j = keep + 1; j < w.vertices.size(); ++j)
                        pos_in_walk[w.vertices[j]] = -1;
                    w.vertices.resize(keep + 1);
                    w.edges.resize(keep);
                } else {
                    w.vertices.push_back(w2);
                    w.edges.push_back(e);
                    pos_in_walk[w2] = static_cast<int>(w.vertices.size()) - 1;
                }
                v = w2;
            }
            walks.push_back(std::move(w));
        }
        return walks;
    }
};

}  // namespace flow_detail

inline EdgeCut min_edge_cut(const MultiGraph& g, VertexId s, VertexId t) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw std::invalid_argument("min_edge_cut: s and t coincide");
    flow_detail::UnitFlow f(g);
    while (f.augment(s, t)) {
    }
    EdgeCut cut;
    cut.side_s = f.residual_side(s);
    std::vector<char> in_s(g.vertex_count(), 0);
    for (VertexId v : cut.side_s) in_s[v] = 1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (in_s[u] != in_s[v]) cut.edges.push_back(e);
    }
    return cut;
}

/// `count` pairwise edge-disjoint s-t paths via flow decomposition. Throws
/// if fewer exist.
inline PathSystem edge_disjoint_paths(const MultiGraph& g, VertexId s, VertexId t,
                                      int count) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw std::invalid_argument("edge_disjoint_paths: s and t coincide");
    if (count < 0) throw std::invalid_argument("edge_disjoint_paths: negative count");
    flow_detail::UnitFlow f(g);
    for (int i = 0; i < count; ++i)
        if (!f.augment(s, t))
            throw std::invalid_argument(
                "edge_disjoint_paths: count exceeds the s-t edge connectivity");
    PathSystem sys;
    sys.paths = f.decompose(s, t, count);
    return sys;
}

enum class SearchStatus { Feasible, Infeasible, Unknown };

struct PairedPathsResult {
    SearchStatus status = SearchStatus::Infeasible;
    PathSystem paths;  // filled only when status == Feasible
};

namespace flow_detail {

struct PairedSearch {
    const MultiGraph& g;
    const std::vector<std::pair<VertexId, VertexId>>& pairs;
    std::vector<char> edge_used;
    // stamp[v] == i+1 marks v as lying on the path currently being grown for
    // pair i; stamps of finished paths linger but are never consulted, since
    // only edge-disjointness is required across paths.
    std::vector<int> stamp;
    std::vector<Walk> walks;
    std::int64_t budget;

    SearchStatus run() {
        walks.assign(pairs.size(), Walk{});
        return place(0);
    }

    SearchStatus place(std::size_t i) {
        if (i == pairs.size()) return SearchStatus::Feasible;
        auto [s, t] = pairs[i];
        walks[i].vertices = {s};
        walks[i].edges.clear();
        if (s == t) return place(i + 1);
        int saved = stamp[s];
        stamp[s] = static_cast<int>(i) + 1;
        SearchStatus st = extend(i, s, t);
        stamp[s] = saved;
        return st;
    }

    SearchStatus extend(std::size_t i, VertexId v, VertexId t) {
        if (v == t) return place(i + 1);
        const int mark = static_cast<int>(i) + 1;
        bool unknown = false;
        for (auto [w, e] : g.incidence()[v]) {
            if (edge_used[e] || stamp[w] == mark || w == v) continue;
            if (--budget < 0) return SearchStatus::Unknown;
            edge_used[e] = 1;
            int saved = stamp[w];
            stamp[w] = mark;
            walks[i].vertices.push_back(w);
            walks[i].edges.push_back(e);
            SearchStatus st = extend(i, w, t);
            if (st == SearchStatus::Feasible) return st;
            if (st == SearchStatus::Unknown) unknown = true;
            walks[i].vertices.pop_back();
            walks[i].edges.pop_back();
            stamp[w] = saved;
            edge_used[e] = 0;
            if (unknown) break;
        }
        return unknown ? SearchStatus::Unknown : SearchStatus::Infeasible;
    }
};

}  // namespace flow_detail

/// Edge-disjoint paths with prescribed endpoint pairs (path i joins
/// pairs[i]). Exact backtracking; NP-hard in general, so a node budget caps
/// the search and yields Unknown when exhausted. Each path is kept
/// vertex-simple, which loses no feasible instances.
inline PairedPathsResult paired_edge_disjoint_paths(
    const MultiGraph& g, const std::vector<std::pair<VertexId, VertexId>>& pairs,
    std::int64_t budget = 4'000'000) {
    for (auto [s, t] : pairs) {
        g.check_vertex(s);
        g.check_vertex(t);
    }
    flow_detail::PairedSearch search{g, pairs,
                                     std::vector<char>(g.edge_count(), 0),
                                     std::vector<int>(g.vertex_count(), 0),
                                     {},
                                     budget};
    PairedPathsResult res;
    res.status = search.run();
    if (res.status == SearchStatus::Feasible) res.paths.paths = std::move(search.walks);
    return res;
}

}  // namespace tilecross
