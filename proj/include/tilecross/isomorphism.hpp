#pragma once

#include <algorithm>
#include <vector>

#include "tilecross/multigraph.hpp"

namespace tilecross {

namespace iso_detail {

// Edge multiplicities as a dense matrix; loops at (v,v) counted once.
inline std::vector<std::vector<int>> multiplicity_matrix(const MultiGraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        ++m[u][v];
        if (u != v) ++m[v][u];
    }
    return m;
}

// Per-vertex invariant: (degree with loops twice, loop count, sorted
// nonzero multiplicities to distinct neighbors).
inline std::vector<std::vector<int>> vertex_signatures(
    const MultiGraph& g, const std::vector<std::vector<int>>& mult) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> sig(n);
    for (VertexId v = 0; v < n; ++v) {
        std::vector<int> row;
        for (VertexId w = 0; w < n; ++w)
            if (w != v && mult[v][w] > 0) row.push_back(mult[v][w]);
        std::sort(row.begin(), row.end());
        sig[v] = {g.degree(v), mult[v][v]};
        sig[v].insert(sig[v].end(), row.begin(), row.end());
    }
    return sig;
}

struct IsoSearch {
    const std::vector<std::vector<int>>& m1;
    const std::vector<std::vector<int>>& m2;
    const std::vector<std::vector<int>>& sig1;
    const std::vector<std::vector<int>>& sig2;
    std::vector<int> order;    // g1 vertices, most-constrained first
    std::vector<int> image;    // g1 vertex -> g2 vertex or -1
    std::vector<char> used;    // g2 vertices already taken

    bool match(std::size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int w = 0; w < static_cast<int>(used.size()); ++w) {
            if (used[w] || sig1[v] != sig2[w]) continue;
            bool ok = m1[v][v] == m2[w][w];
            for (std::size_t j = 0; ok && j < pos; ++j) {
                int p = order[j];
                if (m1[v][p] != m2[w][image[p]]) ok = false;
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (match(pos + 1)) return true;
            used[w] = 0;
            image[v] = -1;
        }
        return false;
    }
};

}  // namespace iso_detail

/// Exact isomorphism test (loops to loops, multiplicities preserved).
/// Backtracking over vertex images; meant for small graphs, roughly up to
/// 40 vertices.
inline bool are_isomorphic(const MultiGraph& g1, const MultiGraph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    int n = g1.vertex_count();
    auto m1 = iso_detail::multiplicity_matrix(g1);
    auto m2 = iso_detail::multiplicity_matrix(g2);
    auto sig1 = iso_detail::vertex_signatures(g1, m1);
    auto sig2 = iso_detail::vertex_signatures(g2, m2);
    auto sorted1 = sig1, sorted2 = sig2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) return false;

    iso_detail::IsoSearch search{m1, m2, sig1, sig2, {}, {}, {}};
    search.order.resize(n);
    for (int v = 0; v < n; ++v) search.order[v] = v;
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return sig1[a] > sig1[b];  // high-degree vertices first
    });
    search.image.assign(n, -1);
    search.used.assign(n, 0);
    return search.match(0);
}

}  // namespace tilecross
