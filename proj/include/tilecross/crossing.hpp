#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tilecross/multigraph.hpp"
#include "tilecross/planarity.hpp"
#include "tilecross/tile.hpp"

namespace tilecross {

/// A drawing witness: which edge pairs cross and, for every crossed edge,
/// the order of its crossings when walking the edge from endpoints().first
/// to .second. The planarized graph replaces each crossing by a degree-4
/// dummy vertex.
struct Planarization {
    MultiGraph base;
    std::vector<std::pair<EdgeId, EdgeId>> crossings;  // pairs e < f, sorted
    std::map<EdgeId, std::vector<int>> order;          // crossing indices per edge

    MultiGraph planarized() const {
        int n = base.vertex_count();
        MultiGraph pg(n + static_cast<int>(crossings.size()));
        for (EdgeId e = 0; e < base.edge_count(); ++e) {
            auto [u, v] = base.endpoints(e);
            auto it = order.find(e);
            if (it == order.end()) {
                pg.add_edge(u, v);
                continue;
            }
            VertexId prev = u;
            for (int ci : it->second) {
                pg.add_edge(prev, n + ci);
                prev = n + ci;
            }
            pg.add_edge(prev, v);
        }
        return pg;
    }
};

struct CrossingWeights {
    double beta = 0.0;  // internal-internal 1+2b, internal-external 1+b, external-external 1
};

struct SolveOptions {
    std::vector<EdgeId> uncrossable;
    std::optional<CrossingWeights> weights;
    std::vector<EdgeKind> edge_kinds;  // per edge id; required when weights set
    int max_k = 8;
    std::int64_t budget = 10'000'000;  // planarity tests
};

struct CrossingResult {
    enum class Status { Solved, Exceeded };
    Status status = Status::Solved;
    int crossings = 0;
    double weight = 0.0;  // equals crossings when unweighted
    Planarization witness;
    // Exceeded only. The optimum provably satisfies value > bound; for
    // weighted runs weight_bound is the tighter statement (optimum weight is
    // at least weight_bound).
    int bound = 0;
    double weight_bound = 0.0;
    std::string reason;  // "ceiling" or "budget"

    bool solved() const { return status == Status::Solved; }
};

namespace cross_detail {

// cr(G) >= m' - 3n' + 6 on the simple support: planarizing a drawing with
// c crossings yields a planar graph on n'+c vertices and m'+2c edges.
inline int euler_lower_bound(const MultiGraph& g) {
    MultiGraph s = simplified(g);
    int n = s.vertex_count(), m = s.edge_count();
    if (n < 3) return 0;
    return std::max(0, m - 3 * n + 6);
}

// Unordered pairs that may cross in some optimal drawing: distinct,
// non-adjacent, crossable, loop-free, listed lexicographically. Adjacent
// and repeated crossings are redundant by the usual redrawing arguments;
// loops can always be drawn tight around their vertex.
inline std::vector<std::pair<EdgeId, EdgeId>> candidate_pairs(
    const MultiGraph& g, const std::vector<EdgeId>& uncrossable) {
    std::vector<char> banned(g.edge_count(), 0);
    for (EdgeId e : uncrossable) {
        g.check_edge(e);
        banned[e] = 1;
    }
    std::vector<std::pair<EdgeId, EdgeId>> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (banned[e] || g.is_loop(e)) continue;
        for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
            if (banned[f] || g.is_loop(f) || g.adjacent_edges(e, f)) continue;
            out.emplace_back(e, f);
        }
    }
    return out;
}

inline MultiGraph planarize(const MultiGraph& base,
                            const std::vector<std::pair<EdgeId, EdgeId>>& crossings,
                            const std::map<EdgeId, std::vector<int>>& order) {
    Planarization p{base, crossings, order};
    return p.planarized();
}

// Probes one crossing set: enumerates crossing orders along multiply
// crossed edges (lexicographically, independently per edge) until a planar
// planarization appears. Returns 1 found / 0 none / -1 budget exhausted.
struct OrderProbe {
    const MultiGraph& base;
    const std::vector<std::pair<EdgeId, EdgeId>>& crossings;
    std::int64_t& budget;
    std::map<EdgeId, std::vector<int>> order;

    int run() {
        order.clear();
        for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
            order[crossings[i].first].push_back(i);
            order[crossings[i].second].push_back(i);
        }
        std::vector<EdgeId> multi;
        for (auto& [e, lst] : order)
            if (lst.size() >= 2) multi.push_back(e);
        return try_orders(multi, 0);
    }

    int try_orders(const std::vector<EdgeId>& multi, std::size_t idx) {
        if (idx == multi.size()) {
            if (--budget < 0) return -1;
            return is_planar(planarize(base, crossings, order)) ? 1 : 0;
        }
        auto& lst = order[multi[idx]];
        std::sort(lst.begin(), lst.end());
        do {
            int r = try_orders(multi, idx + 1);
            if (r != 0) return r;
        } while (std::next_permutation(lst.begin(), lst.end()));
        return 0;
    }
};

// Lexicographic scan over all size-k subsets of the candidate pairs. On
// success `chosen` holds the subset and `found_order` its first feasible
// order assignment.
struct SubsetScan {
    const MultiGraph& g;
    const std::vector<std::pair<EdgeId, EdgeId>>& pairs;
    std::int64_t& budget;
    std::vector<std::pair<EdgeId, EdgeId>> chosen;
    std::map<EdgeId, std::vector<int>> found_order;

    int scan(std::size_t start, std::size_t remaining) {
        if (remaining == 0) {
            OrderProbe probe{g, chosen, budget, {}};
            int r = probe.run();
            if (r == 1) found_order = std::move(probe.order);
            return r;
        }
        for (std::size_t i = start; i + remaining <= pairs.size(); ++i) {
            chosen.push_back(pairs[i]);
            int r = scan(i + 1, remaining - 1);
            if (r != 0) return r;  // keep `chosen` intact on success
            chosen.pop_back();
        }
        return 0;
    }
};

inline double pair_weight(std::pair<EdgeId, EdgeId> pr,
                          const std::vector<EdgeKind>& kinds, double beta) {
    int internals = (kinds[pr.first] == EdgeKind::Internal) +
                    (kinds[pr.second] == EdgeKind::Internal);
    return 1.0 + beta * internals;
}

}  // namespace cross_detail

/// Minimum number of crossings (or minimum total weight, when weights are
/// given) over all drawings in which no two adjacent edges cross, no pair
/// crosses twice, and uncrossable edges are crossing-free. Iterative
/// deepening from the Euler bound; the witness is canonical: the
/// lexicographically least optimal crossing set, with the first feasible
/// order assignment.
inline CrossingResult crossing_number(const MultiGraph& g, SolveOptions opts = {}) {
    if (opts.weights && static_cast<int>(opts.edge_kinds.size()) < g.edge_count())
        throw std::invalid_argument(
            "crossing_number: weighted solve needs a kind for every edge");
    if (opts.max_k < 0)
        throw std::invalid_argument("crossing_number: negative ceiling");

    auto pairs = cross_detail::candidate_pairs(g, opts.uncrossable);
    std::int64_t budget = opts.budget;
    int lb = cross_detail::euler_lower_bound(g);

    auto exceeded = [&](int bound, double weight_bound, const std::string& why) {
        CrossingResult res;
        res.status = CrossingResult::Status::Exceeded;
        res.bound = bound;
        res.weight_bound = weight_bound;
        res.reason = why;
        return res;
    };

    if (!opts.weights) {
        for (int k = lb; k <= opts.max_k; ++k) {
            cross_detail::SubsetScan scan{g, pairs, budget, {}, {}};
            int r = scan.scan(0, k);
            if (r == -1) return exceeded(k - 1, k, "budget");
            if (r == 1) {
                CrossingResult res;
                res.crossings = k;
                res.weight = k;
                res.witness = Planarization{g, std::move(scan.chosen),
                                            std::move(scan.found_order)};
                return res;
            }
        }
        int bound = std::max(opts.max_k, lb - 1);
        return exceeded(bound, bound + 1, "ceiling");
    }

    // Weighted: best-first over crossing sets in (total weight, lex) order.
    // Weights are at least 1, so a set's weight dominates its prefixes' and
    // the first feasible pop is optimal.
    const double beta = opts.weights->beta;
    std::vector<double> pw(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        pw[i] = cross_detail::pair_weight(pairs[i], opts.edge_kinds, beta);

    struct Item {
        double w;
        std::vector<int> idx;
        bool operator>(const Item& o) const {
            if (w != o.w) return w > o.w;
            return idx > o.idx;
        }
    };
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0.0, {}});
    double frontier_weight = 0.0;
    while (!pq.empty()) {
        Item it = pq.top();
        pq.pop();
        frontier_weight = it.w;
        if (static_cast<int>(it.idx.size()) >= lb) {
            std::vector<std::pair<EdgeId, EdgeId>> chosen;
            for (int i : it.idx) chosen.push_back(pairs[i]);
            cross_detail::OrderProbe probe{g, chosen, budget, {}};
            int r = probe.run();
            if (r == -1) return exceeded(lb - 1, it.w, "budget");
            if (r == 1) {
                CrossingResult res;
                res.crossings = static_cast<int>(chosen.size());
                res.weight = it.w;
                res.witness =
                    Planarization{g, std::move(chosen), std::move(probe.order)};
                return res;
            }
        }
        if (static_cast<int>(it.idx.size()) < opts.max_k) {
            int first = it.idx.empty() ? 0 : it.idx.back() + 1;
            for (int j = first; j < static_cast<int>(pairs.size()); ++j) {
                Item child{it.w + pw[j], it.idx};
                child.idx.push_back(j);
                pq.push(std::move(child));
            }
        }
    }
    return exceeded(std::max(opts.max_k, lb - 1), frontier_weight, "ceiling");
}

/// crn of cyc(Tⁿ). With weights set, edge kinds come from the cyc labels.
inline CrossingResult c_n(const Tile& t, int n, SolveOptions opts = {}) {
    CycGraph c = cyc(t, n);
    if (opts.weights) {
        opts.edge_kinds.clear();
        for (const auto& l : c.edge_label) opts.edge_kinds.push_back(l.kind);
    }
    return crossing_number(c.graph, opts);
}

/// Minimum crossings of a tile drawing of Tⁿ: the framed graph with the
/// whole wheel uncrossable.
inline CrossingResult t_n(const Tile& t, int n, SolveOptions opts = {}) {
    FramedGraph f = frame(t, n);
    for (EdgeId e : f.frame_edges) opts.uncrossable.push_back(e);
    if (opts.weights) {
        opts.edge_kinds.assign(f.graph.edge_count(), EdgeKind::External);
        for (std::size_t i = 0; i < f.core_edges.size(); ++i)
            opts.edge_kinds[f.core_edges[i]] = f.core_labels[i].kind;
    }
    return crossing_number(f.graph, opts);
}

/// Total weight of a witness under the 1 / 1+b / 1+2b crossing classes.
inline double crn_beta(const Planarization& p, const std::vector<EdgeKind>& kinds,
                       CrossingWeights w) {
    if (static_cast<int>(kinds.size()) < p.base.edge_count())
        throw std::invalid_argument("crn_beta: kinds do not cover all edges");
    double s = 0.0;
    for (auto pr : p.crossings) s += cross_detail::pair_weight(pr, kinds, w.beta);
    return s;
}

/// Full independent check of a witness: base match, pair validity (sorted,
/// distinct, non-adjacent, no loops, none uncrossable, no repeats), order
/// lists consistent, and the planarized graph actually planar.
inline bool verify_witness(const MultiGraph& g, const Planarization& p,
                           const SolveOptions& opts = {}) {
    if (!(p.base == g)) return false;
    std::vector<char> banned(g.edge_count(), 0);
    for (EdgeId e : opts.uncrossable) {
        if (e < 0 || e >= g.edge_count()) return false;
        banned[e] = 1;
    }
    for (std::size_t i = 0; i < p.crossings.size(); ++i) {
        auto [e, f] = p.crossings[i];
        if (e < 0 || f < 0 || e >= g.edge_count() || f >= g.edge_count()) return false;
        if (e >= f) return false;
        if (banned[e] || banned[f]) return false;
        if (g.is_loop(e) || g.is_loop(f)) return false;
        if (g.adjacent_edges(e, f)) return false;
        if (i > 0 && !(p.crossings[i - 1] < p.crossings[i])) return false;
    }
    std::map<EdgeId, std::vector<int>> expect;
    for (int i = 0; i < static_cast<int>(p.crossings.size()); ++i) {
        expect[p.crossings[i].first].push_back(i);
        expect[p.crossings[i].second].push_back(i);
    }
    if (p.order.size() != expect.size()) return false;
    for (auto& [e, lst] : expect) {
        auto it = p.order.find(e);
        if (it == p.order.end()) return false;
        auto sorted = it->second;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != lst) return false;
    }
    return is_planar(p.planarized());
}

}  // namespace tilecross
