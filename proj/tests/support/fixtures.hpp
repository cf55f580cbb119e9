#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "tilecross/multigraph.hpp"

namespace fixtures {

using tilecross::MultiGraph;

inline MultiGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    MultiGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline MultiGraph complete(int n) {
    MultiGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline MultiGraph complete_bipartite(int a, int b) {
    MultiGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

inline MultiGraph cycle(int n) {
    MultiGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline MultiGraph path(int n) {
    MultiGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline MultiGraph petersen() {
    MultiGraph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

/// Random multigraph with loops and parallel edges allowed.
inline MultiGraph random_multigraph(std::mt19937& rng, int max_n, int max_m,
                                    bool allow_loops = true) {
    std::uniform_int_distribution<int> nd(1, max_n);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(0, max_m);
    int m = md(rng);
    std::uniform_int_distribution<int> vd(0, n - 1);
    MultiGraph g(n);
    for (int i = 0; i < m; ++i) {
        int u = vd(rng), v = vd(rng);
        if (!allow_loops && u == v) continue;
        g.add_edge(u, v);
    }
    return g;
}

/// Relabels vertices by a random permutation and shuffles edge insertion
/// order; the result is isomorphic to the input.
inline MultiGraph shuffled_copy(const MultiGraph& g, std::mt19937& rng) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> order(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);
    MultiGraph h(n);
    for (int e : order) {
        auto [u, v] = g.endpoints(e);
        h.add_edge(perm[u], perm[v]);
    }
    return h;
}

}  // namespace fixtures
