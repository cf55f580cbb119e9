#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilecross/flows.hpp"
#include "tilecross/multigraph.hpp"
#include "tilecross/tile.hpp"

namespace tilecross {

namespace reduce_detail {

// G plus apexes a (joined to the A-entries) and b (joined to the
// B-entries). a = |V|, b = |V|+1; apex edges follow the graph's edges,
// a-side block first, one edge per boundary position.
inline MultiGraph apex_graph(const Tile& t) {
    MultiGraph g(t.graph.vertex_count() + 2);
    for (auto [u, v] : t.graph.edges()) g.add_edge(u, v);
    VertexId a = t.graph.vertex_count(), b = a + 1;
    for (VertexId v : t.A) g.add_edge(a, v);
    for (VertexId v : t.B) g.add_edge(b, v);
    return g;
}

}  // namespace reduce_detail

/// True when k edge-disjoint strands can run through the tile with some
/// exit permutation: the a-b min cut of the apexed graph has full width.
inline bool is_weakly_linked(const Tile& t) {
    check_tile(t);
    if (width(t) == 0) return true;
    MultiGraph g = reduce_detail::apex_graph(t);
    VertexId a = t.graph.vertex_count(), b = a + 1;
    return min_edge_cut(g, a, b).size() == width(t);
}

/// Linkedness asks for position-preserving strands: path i joins A(i) to
/// B(i). Exact backtracking; Unknown when the node budget runs out, never
/// coerced to an answer.
inline SearchStatus is_linked(const Tile& t, std::int64_t budget = 4'000'000) {
    check_tile(t);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i < width(t); ++i) pairs.emplace_back(t.A[i], t.B[i]);
    return paired_edge_disjoint_paths(t.graph, pairs, budget).status;
}

/// One width-reducing cut transformation, as applied by weakly_link.
struct CutStep {
    std::vector<EdgeId> cut;      // min-cut edge ids in the apexed graph
    std::vector<EdgeId> removed;  // their images in cyc(T, 1), deleted there
    std::vector<VertexId> u;      // new exit sequence (B side)
    std::vector<VertexId> v;      // new entry sequence (A side)
    int width_before = 0;
    int width_after = 0;
};

struct WeakLinkResult {
    Tile tile;                     // T0, weakly linked
    std::vector<int> permutation;  // strand i enters at A(i), leaves at B(pi(i))
    PathSystem path_system;        // path i realizes strand i inside T0's graph
    std::vector<CutStep> steps;
};

/// Reduces a tile to a weakly linked one with the same cyclic closures:
/// while the apexed a-b min cut is smaller than the width, reroute the
/// boundary through the cut. Cut edges are taken in ascending id order; the
/// cut itself is the one nearest a. A cut edge inside G contributes its own
/// endpoints (a-side endpoint to the exit sequence); a cut edge touching an
/// apex stands for the strand's closing edge in cyc(T) and contributes that
/// strand's B- resp. A-element instead.
inline WeakLinkResult weakly_link(const Tile& t) {
    check_tile(t);
    WeakLinkResult res;
    res.tile = t;
    while (true) {
        const Tile& cur = res.tile;
        const int k = width(cur);
        const int m = cur.graph.edge_count();
        if (k == 0) break;
        MultiGraph g = reduce_detail::apex_graph(cur);
        VertexId a = cur.graph.vertex_count(), b = a + 1;
        EdgeCut cut = min_edge_cut(g, a, b);
        if (cut.size() == k) break;

        std::vector<char> in_a(g.vertex_count(), 0);
        for (VertexId x : cut.side_s) in_a[x] = 1;
        CutStep step;
        step.cut = cut.edges;
        step.width_before = k;
        step.width_after = cut.size();
        for (EdgeId s : cut.edges) {
            auto [x, y] = g.endpoints(s);
            if (s < m) {
                step.u.push_back(in_a[x] ? x : y);
                step.v.push_back(in_a[x] ? y : x);
                step.removed.push_back(s);
            } else {
                int j = s < m + k ? s - m : s - m - k;
                step.u.push_back(cur.B[j]);
                step.v.push_back(cur.A[j]);
                step.removed.push_back(m + j);  // closing edge j of cyc(T, 1)
            }
        }
        for (std::size_t i = 0; i < step.removed.size(); ++i)
            for (std::size_t j = i + 1; j < step.removed.size(); ++j)
                if (step.removed[i] == step.removed[j])
                    throw std::runtime_error(
                        "weakly_link: minimum cut contains both apex edges of "
                        "one strand; this degenerate case is not supported");

        // cyc(T, 1) minus the mapped edges, on the same vertex set.
        MultiGraph closed = cyc(cur, 1).graph;
        std::vector<char> drop(closed.edge_count(), 0);
        for (EdgeId e : step.removed) drop[e] = 1;
        MultiGraph reduced(closed.vertex_count());
        for (EdgeId e = 0; e < closed.edge_count(); ++e)
            if (!drop[e]) {
                auto [x, y] = closed.endpoints(e);
                reduced.add_edge(x, y);
            }
        Tile next{std::move(reduced), step.v, step.u};
        res.steps.push_back(std::move(step));
        res.tile = std::move(next);
    }

    // Strands and their exit permutation by flow decomposition.
    const int k = width(res.tile);
    res.permutation.assign(k, -1);
    res.path_system.paths.assign(k, Walk{});
    if (k > 0) {
        const int m = res.tile.graph.edge_count();
        MultiGraph g = reduce_detail::apex_graph(res.tile);
        VertexId a = res.tile.graph.vertex_count(), b = a + 1;
        PathSystem sys = edge_disjoint_paths(g, a, b, k);
        for (const Walk& w : sys.paths) {
            int entry = w.edges.front() - m;
            int exit = w.edges.back() - m - k;
            if (entry < 0 || entry >= k || exit < 0 || exit >= k ||
                res.permutation[entry] != -1)
                throw std::logic_error("weakly_link: malformed flow decomposition");
            res.permutation[entry] = exit;
            Walk inner;
            inner.vertices.assign(w.vertices.begin() + 1, w.vertices.end() - 1);
            inner.edges.assign(w.edges.begin() + 1, w.edges.end() - 1);
            res.path_system.paths[entry] = std::move(inner);
        }
    }
    return res;
}

/// lcm of the cycle lengths of the strand permutation: raising the tile to
/// this power makes it linked.
inline long long linking_power(const WeakLinkResult& w) {
    long long m = 1;
    std::vector<char> seen(w.permutation.size(), 0);
    for (std::size_t i = 0; i < w.permutation.size(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (std::size_t j = i; !seen[j]; j = w.permutation[j]) {
            seen[j] = 1;
            ++len;
        }
        m = std::lcm(m, len);
    }
    return m;
}

/// Splits a linked tile into one subtile per connected component, boundary
/// subsequences kept in their original order. Linkedness guarantees each
/// component holds equally many A- and B-entries.
inline std::vector<Tile> split_components(const Tile& t,
                                          std::int64_t budget = 4'000'000) {
    check_tile(t);
    SearchStatus linked = is_linked(t, budget);
    if (linked == SearchStatus::Infeasible)
        throw std::invalid_argument(
            "split_components: tile is not linked; apply weakly_link and raise "
            "to the linking power first");
    if (linked == SearchStatus::Unknown)
        throw std::runtime_error(
            "split_components: linkedness check ran out of budget");

    ComponentMap cm = components(t.graph);
    std::vector<std::vector<VertexId>> members(cm.count);
    for (VertexId v = 0; v < t.graph.vertex_count(); ++v)
        members[cm.component_of[v]].push_back(v);
    std::vector<int> local(t.graph.vertex_count(), -1);
    std::vector<Tile> out(cm.count);
    for (int c = 0; c < cm.count; ++c) {
        for (std::size_t i = 0; i < members[c].size(); ++i)
            local[members[c][i]] = static_cast<int>(i);
        out[c].graph = MultiGraph(static_cast<int>(members[c].size()));
    }
    for (auto [x, y] : t.graph.edges())
        out[cm.component_of[x]].graph.add_edge(local[x], local[y]);
    for (VertexId v : t.A) out[cm.component_of[v]].A.push_back(local[v]);
    for (VertexId v : t.B) out[cm.component_of[v]].B.push_back(local[v]);
    for (const Tile& sub : out)
        if (sub.A.size() != sub.B.size())
            throw std::logic_error(
                "split_components: component with unbalanced boundary");
    return out;
}

/// One cycle of the component permutation: its representative subtile
/// product S, the cycle length, and the representative's index.
struct CycleRep {
    Tile tile;
    int length = 1;
    int rep = 0;
};

/// The limit-decomposition data: after weak linking and raising to the
/// linking power m, the components T_1..T_r of T0^m are connected linked
/// tiles with c(T) = (c(T_1)+...+c(T_r))/m, and the cycle representatives
/// S_i satisfy c(T) = sum_i c(S_i).
struct Decomposition {
    WeakLinkResult link;
    long long m = 1;
    std::vector<Tile> subtiles;
    std::vector<int> component_permutation;
    std::vector<CycleRep> cycles;
};

namespace reduce_detail {

// The subtile of one power-copy piece: vertices of `piece` (ascending,
// base-tile ids), induced edges, boundary entries restricted in order.
inline Tile piece_subtile(const Tile& base, const std::vector<VertexId>& piece) {
    std::vector<int> local(base.graph.vertex_count(), -1);
    for (std::size_t i = 0; i < piece.size(); ++i)
        local[piece[i]] = static_cast<int>(i);
    Tile sub;
    sub.graph = MultiGraph(static_cast<int>(piece.size()));
    for (auto [x, y] : base.graph.edges())
        if (local[x] != -1 && local[y] != -1) sub.graph.add_edge(local[x], local[y]);
    for (VertexId v : base.A)
        if (local[v] != -1) sub.A.push_back(local[v]);
    for (VertexId v : base.B)
        if (local[v] != -1) sub.B.push_back(local[v]);
    return sub;
}

}  // namespace reduce_detail

/// Full reduction pipeline: weakly link, raise to the linking power, split
/// into components, and read off how the components permute from one copy
/// of T0 to the next; each permutation cycle yields a representative tile
/// S_i as the product of its first-copy subtiles.
inline Decomposition limit_decomposition(const Tile& t,
                                         std::int64_t budget = 4'000'000) {
    Decomposition d;
    d.link = weakly_link(t);
    d.m = linking_power(d.link);
    const Tile& t0 = d.link.tile;
    const int nv0 = t0.graph.vertex_count();
    const int m = static_cast<int>(d.m);
    Tile raised = power(t0, m);
    d.subtiles = split_components(raised, budget);

    // piece[i][c]: base-tile vertices that component i occupies in copy c.
    ComponentMap cm = components(raised.graph);
    const int r = cm.count;
    std::vector<std::vector<std::vector<VertexId>>> piece(
        r, std::vector<std::vector<VertexId>>(m));
    for (VertexId v = 0; v < raised.graph.vertex_count(); ++v)
        piece[cm.component_of[v]][v / nv0].push_back(v % nv0);

    std::vector<char> has_strand(r, 0);
    for (VertexId v : raised.A) has_strand[cm.component_of[v]] = 1;

    auto find_component = [&](int copy, const std::vector<VertexId>& want) {
        for (int j = 0; j < r; ++j)
            if (piece[j][copy] == want) return j;
        throw std::logic_error(
            "limit_decomposition: component pattern does not shift across copies");
    };

    d.component_permutation.assign(r, -1);
    for (int i = 0; i < r; ++i) {
        if (m == 1) {
            d.component_permutation[i] = i;
            continue;
        }
        if (has_strand[i]) {
            for (int c = 0; c < m; ++c)
                if (piece[i][c].empty())
                    throw std::logic_error(
                        "limit_decomposition: strand component misses a copy");
            int j = find_component(0, piece[i][1]);
            for (int c = 0; c + 1 < m; ++c)
                if (piece[j][c] != piece[i][c + 1])
                    throw std::logic_error(
                        "limit_decomposition: component pattern does not shift "
                        "across copies");
            d.component_permutation[i] = j;
        } else {
            // A strand-free component sits in a single copy; its images in
            // the other copies chain into one cycle of length m.
            int c = 0;
            while (piece[i][c].empty()) ++c;
            int j = find_component((c + 1) % m, piece[i][c]);
            d.component_permutation[i] = j;
        }
    }

    std::vector<char> seen(r, 0);
    for (int b = 0; b < r; ++b) {
        if (seen[b]) continue;
        CycleRep rep;
        rep.rep = b;
        rep.length = 0;
        Tile prod;
        bool first = true;
        for (int j = b; !seen[j]; j = d.component_permutation[j]) {
            seen[j] = 1;
            ++rep.length;
            Tile factor = reduce_detail::piece_subtile(t0, piece[j][0]);
            prod = first ? std::move(factor) : compose(prod, factor);
            first = false;
        }
        if (d.m % rep.length != 0)
            throw std::logic_error(
                "limit_decomposition: cycle length does not divide the linking "
                "power");
        rep.tile = std::move(prod);
        d.cycles.push_back(std::move(rep));
    }
    return d;
}

}  // namespace tilecross
