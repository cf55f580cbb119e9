#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tilecross {

using VertexId = int;
using EdgeId = int;

/// Undirected multigraph. Vertices are 0..vertex_count()-1, edges are stored
/// as endpoint pairs and identified by their index in the edge list. Loops
/// and parallel edges are allowed; nothing here assumes simplicity.
class MultiGraph {
public:
    MultiGraph() = default;

    explicit MultiGraph(int vertex_count) : n_(vertex_count) {
        if (vertex_count < 0)
            throw std::invalid_argument("multigraph: negative vertex count");
        inc_.resize(n_);
    }

    MultiGraph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges)
        : MultiGraph(vertex_count) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Appends an edge and returns its id. Ids are dense and stable.
    EdgeId add_edge(VertexId u, VertexId v) {
        check_vertex(u);
        check_vertex(v);
        edges_.emplace_back(u, v);
        EdgeId e = static_cast<EdgeId>(edges_.size()) - 1;
        inc_[u].emplace_back(v, e);
        inc_[v].emplace_back(u, e);
        return e;
    }

    VertexId add_vertex() {
        inc_.emplace_back();
        return n_++;
    }

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
        check_edge(e);
        return edges_[e];
    }

    bool is_loop(EdgeId e) const {
        auto [u, v] = endpoints(e);
        return u == v;
    }

    /// True when the two edges share at least one endpoint (a loop is
    /// adjacent to every edge at its vertex, and every edge to itself).
    bool adjacent_edges(EdgeId e, EdgeId f) const {
        auto [a, b] = endpoints(e);
        auto [c, d] = endpoints(f);
        return a == c || a == d || b == c || b == d;
    }

    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    /// Incidence lists kept in step with the edge list: for each vertex the
    /// (neighbor, edge id) pairs in edge-id order, loops appearing twice.
    const std::vector<std::vector<std::pair<VertexId, EdgeId>>>& incidence() const {
        return inc_;
    }

    int degree(VertexId v) const {
        check_vertex(v);
        int d = 0;
        for (auto [a, b] : edges_) {
            if (a == v) ++d;
            if (b == v) ++d;
        }
        return d;
    }

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("multigraph: vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }

    void check_edge(EdgeId e) const {
        if (e < 0 || e >= edge_count())
            throw std::invalid_argument("multigraph: edge " + std::to_string(e) +
                                        " out of range [0," + std::to_string(edge_count()) + ")");
    }

    bool operator==(const MultiGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> inc_;
};

/// Connected components as a vertex -> component-index map, components
/// numbered by smallest contained vertex, 0,1,2,... in that order.
struct ComponentMap {
    std::vector<int> component_of;
    int count = 0;
};

inline ComponentMap components(const MultiGraph& g) {
    ComponentMap result;
    result.component_of.assign(g.vertex_count(), -1);
    const auto& inc = g.incidence();
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (result.component_of[s] != -1) continue;
        int c = result.count++;
        std::vector<VertexId> stack{s};
        result.component_of[s] = c;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (auto [w, e] : inc[v]) {
                (void)e;
                if (result.component_of[w] == -1) {
                    result.component_of[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    return result;
}

/// Loops dropped and parallel classes collapsed to single edges. The result
/// carries no id correspondence back to the input; use it where only the
/// simple support of the graph matters.
inline MultiGraph simplified(const MultiGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (auto [u, v] : g.edges()) {
        if (u == v) continue;
        auto key = std::minmax(u, v);
        kept.emplace_back(key.first, key.second);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return MultiGraph(g.vertex_count(), std::move(kept));
}

}  // namespace tilecross
