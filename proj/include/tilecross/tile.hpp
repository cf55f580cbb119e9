#pragma once

#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tilecross/multigraph.hpp"

namespace tilecross {

/// A tile: a multigraph with two equal-length boundary sequences. Entries
/// may repeat and A and B may overlap arbitrarily.
struct Tile {
    MultiGraph graph;
    std::vector<VertexId> A;
    std::vector<VertexId> B;
};

inline int width(const Tile& t) { return static_cast<int>(t.A.size()); }

inline void check_tile(const Tile& t) {
    if (t.A.size() != t.B.size())
        throw std::invalid_argument("tile: boundary sequences differ in length (" +
                                    std::to_string(t.A.size()) + " vs " +
                                    std::to_string(t.B.size()) + ")");
    for (VertexId v : t.A) t.graph.check_vertex(v);
    for (VertexId v : t.B) t.graph.check_vertex(v);
}

/// Glues t2 after t1: disjoint union plus an edge from the i-th exit of t1
/// to the i-th entry of t2. The bridging edges get the highest edge ids.
inline Tile compose(const Tile& t1, const Tile& t2) {
    check_tile(t1);
    check_tile(t2);
    if (width(t1) != width(t2))
        throw std::invalid_argument("compose: width mismatch (" +
                                    std::to_string(width(t1)) + " vs " +
                                    std::to_string(width(t2)) + ")");
    int off = t1.graph.vertex_count();
    Tile r;
    r.graph = MultiGraph(off + t2.graph.vertex_count());
    for (auto [u, v] : t1.graph.edges()) r.graph.add_edge(u, v);
    for (auto [u, v] : t2.graph.edges()) r.graph.add_edge(off + u, off + v);
    for (int i = 0; i < width(t1); ++i)
        r.graph.add_edge(t1.B[i], off + t2.A[i]);
    r.A = t1.A;
    for (VertexId v : t2.B) r.B.push_back(off + v);
    return r;
}

enum class EdgeKind { Internal, External };

struct EdgeLabel {
    EdgeKind kind = EdgeKind::Internal;
    int copy = 0;  // internal: the copy; external: the seam from copy to copy+1 mod n
    bool operator==(const EdgeLabel&) const = default;
};

namespace tile_detail {

// The n-th power laid out copy by copy: copy j occupies the vertex block
// [j|V|, (j+1)|V|) and its edges land after the seam j-1 bridges, matching
// what the compose fold produces. Labels record copy resp. seam per edge.
struct LayeredPower {
    MultiGraph graph;
    std::vector<VertexId> A, B;
    std::vector<int> copy_of_vertex;
    std::vector<EdgeLabel> labels;
};

inline LayeredPower layered_power(const Tile& t, int n) {
    check_tile(t);
    if (n < 1) throw std::invalid_argument("power: exponent must be at least 1");
    int nv = t.graph.vertex_count();
    int k = width(t);
    LayeredPower p;
    p.graph = MultiGraph(n * nv);
    p.copy_of_vertex.resize(n * nv);
    for (int j = 0; j < n; ++j)
        for (int v = 0; v < nv; ++v) p.copy_of_vertex[j * nv + v] = j;
    auto add_copy = [&](int j) {
        for (auto [u, v] : t.graph.edges()) {
            p.graph.add_edge(j * nv + u, j * nv + v);
            p.labels.push_back({EdgeKind::Internal, j});
        }
    };
    add_copy(0);
    for (int j = 1; j < n; ++j) {
        add_copy(j);
        for (int i = 0; i < k; ++i) {
            p.graph.add_edge((j - 1) * nv + t.B[i], j * nv + t.A[i]);
            p.labels.push_back({EdgeKind::External, j - 1});
        }
    }
    for (VertexId v : t.A) p.A.push_back(v);
    for (VertexId v : t.B) p.B.push_back((n - 1) * nv + v);
    return p;
}

}  // namespace tile_detail

inline Tile power(const Tile& t, int n) {
    auto p = tile_detail::layered_power(t, n);
    return Tile{std::move(p.graph), std::move(p.A), std::move(p.B)};
}

/// The cyclic closure cyc(Tⁿ) with per-edge and per-vertex provenance.
/// External seam i joins copy i to copy (i+1) mod n; the closing seam n-1
/// carries the highest edge ids.
struct CycGraph {
    MultiGraph graph;
    int n = 0;
    std::vector<int> copy_of_vertex;
    std::vector<EdgeLabel> edge_label;
};

inline CycGraph cyc(const Tile& t, int n) {
    auto p = tile_detail::layered_power(t, n);
    CycGraph c;
    c.graph = std::move(p.graph);
    c.n = n;
    c.copy_of_vertex = std::move(p.copy_of_vertex);
    c.edge_label = std::move(p.labels);
    for (int i = 0; i < width(t); ++i) {
        c.graph.add_edge(p.B[i], p.A[i]);
        c.edge_label.push_back({EdgeKind::External, n - 1});
    }
    return c;
}

/// Tⁿ between two trivial width-k tiles, drawn in a disk: the 2k boundary
/// vertices are forced into the cyclic order v₁..v_k, v'_k..v'_1 by an
/// uncrossable cycle through them plus an apex joined to each of them.
/// Width 0 degenerates to a lone apex next to the bare power graph.
struct FramedGraph {
    MultiGraph graph;
    std::vector<VertexId> boundary_order;
    VertexId apex = -1;
    std::vector<EdgeId> frame_edges;
    std::vector<EdgeId> core_edges;
    std::vector<EdgeLabel> core_labels;  // parallel to core_edges
};

inline FramedGraph frame(const Tile& t, int n) {
    int k = width(t);
    Tile z;
    z.graph = MultiGraph(k);
    for (int i = 0; i < k; ++i) {
        z.A.push_back(i);
        z.B.push_back(i);
    }
    Tile body = k == 0 ? power(t, n) : compose(compose(z, power(t, n)), z);

    FramedGraph f;
    f.graph = body.graph;
    int m_tile = t.graph.edge_count() * n + (n - 1) * k;
    auto layered = tile_detail::layered_power(t, n);
    for (EdgeId e = 0; e < m_tile; ++e) {
        f.core_edges.push_back(e);
        f.core_labels.push_back(layered.labels[e]);
    }
    for (int i = 0; i < k; ++i) {  // entry bridges from the v_i
        f.core_edges.push_back(m_tile + i);
        f.core_labels.push_back({EdgeKind::External, 0});
    }
    for (int i = 0; i < k; ++i) {  // exit bridges to the v'_i
        f.core_edges.push_back(m_tile + k + i);
        f.core_labels.push_back({EdgeKind::External, n - 1});
    }

    int nv_power = t.graph.vertex_count() * n;
    for (int i = 0; i < k; ++i) f.boundary_order.push_back(i);
    for (int i = k - 1; i >= 0; --i) f.boundary_order.push_back(k + nv_power + i);
    if (k > 0) {
        int b = static_cast<int>(f.boundary_order.size());
        for (int i = 0; i < b; ++i)
            f.frame_edges.push_back(f.graph.add_edge(
                f.boundary_order[i], f.boundary_order[(i + 1) % b]));
        f.apex = f.graph.add_vertex();
        for (VertexId v : f.boundary_order)
            f.frame_edges.push_back(f.graph.add_edge(f.apex, v));
    } else {
        f.apex = f.graph.add_vertex();
    }
    return f;
}

/// M(T): the crossing-pair bound binom(|E| + 2k, 2).
inline long long big_m(const Tile& t) {
    long long x = t.graph.edge_count() + 2LL * width(t);
    return x * (x - 1) / 2;
}

/// Fewest distinct copies of the tile that a path joining an endpoint of e1
/// to an endpoint of e2 must pass through (both endpoints' copies count).
/// Copies visited by any walk form a contiguous arc of the cycle of copies,
/// so the search state is (vertex, arc window). Disconnected pairs yield
/// nullopt.
inline std::optional<int> cyclic_tile_distance(const CycGraph& c, EdgeId e1,
                                               EdgeId e2) {
    c.graph.check_edge(e1);
    c.graph.check_edge(e2);
    const int n = c.n;
    const int nv = c.graph.vertex_count();
    auto in_window = [&](int copy, int a, int len) {
        return ((copy - a + n) % n) < len;
    };
    std::vector<char> goal(nv, 0);
    goal[c.graph.endpoints(e2).first] = 1;
    goal[c.graph.endpoints(e2).second] = 1;

    // State (v, a, len): v reached by a walk whose copies are exactly the
    // arc a, a+1, ..., a+len-1. Priority = len; transitions grow len by at
    // most 1, so this is a plain Dijkstra run.
    std::size_t states = static_cast<std::size_t>(nv) * n * (n + 1);
    if (states > 200'000'000)
        throw std::invalid_argument("cyclic_tile_distance: instance too large");
    std::vector<char> seen(states, 0);
    auto state_id = [&](int v, int a, int len) {
        return (static_cast<std::size_t>(v) * n + a) * (n + 1) + len;
    };
    using State = std::tuple<int, int, int>;  // len, v, a (min-heap on len)
    std::priority_queue<State, std::vector<State>, std::greater<>> pq;
    auto push = [&](int len, int v, int a) {
        if (!seen[state_id(v, a, len)]) {
            seen[state_id(v, a, len)] = 1;
            pq.emplace(len, v, a);
        }
    };
    for (VertexId p : {c.graph.endpoints(e1).first, c.graph.endpoints(e1).second})
        push(1, p, c.copy_of_vertex[p]);
    while (!pq.empty()) {
        auto [len, v, a] = pq.top();
        pq.pop();
        if (goal[v]) return len;
        for (auto [w, e] : c.graph.incidence()[v]) {
            int cw = c.copy_of_vertex[w];
            if (in_window(cw, a, len)) {
                push(len, w, a);
            } else if (len < n && cw == (a + n - 1) % n) {
                push(len + 1, w, cw);
            } else if (len < n && cw == (a + len) % n) {
                push(len + 1, w, a);
            }
        }
    }
    return std::nullopt;
}

}  // namespace tilecross
