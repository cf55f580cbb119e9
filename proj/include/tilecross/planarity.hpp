#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "tilecross/multigraph.hpp"

namespace tilecross {

namespace lr_detail {

// Left-right planarity test, decision-only. The structure follows Brandes'
// formulation: a first DFS orients the graph and computes lowpoints and
// nesting depths, a second DFS over nesting-ordered adjacency lists
// maintains a stack of conflict pairs of back-edge intervals and fails
// exactly when two return edges are forced onto the same side twice.
class LRTester {
public:
    explicit LRTester(const MultiGraph& g)
        : n_(g.vertex_count()), m_(g.edge_count()) {
        inc_.resize(n_);
        for (EdgeId e = 0; e < m_; ++e) {
            auto [u, v] = g.endpoints(e);
            inc_[u].emplace_back(v, e);
            inc_[v].emplace_back(u, e);
        }
        height_.assign(n_, -1);
        parent_edge_.assign(n_, kNone);
        src_.assign(m_, kNone);
        dst_.assign(m_, kNone);
        lowpt_.assign(m_, 0);
        lowpt2_.assign(m_, 0);
        nesting_depth_.assign(m_, 0);
        ref_.assign(m_, kNone);
        lowpt_edge_.assign(m_, kNone);
        stack_bottom_.assign(m_, 0);
        out_.resize(n_);
    }

    bool planar() {
        for (VertexId s = 0; s < n_; ++s) {
            if (height_[s] != -1) continue;
            height_[s] = 0;
            dfs_orient(s);
        }
        for (VertexId v = 0; v < n_; ++v) {
            std::stable_sort(out_[v].begin(), out_[v].end(), [&](EdgeId a, EdgeId b) {
                return nesting_depth_[a] < nesting_depth_[b];
            });
        }
        for (VertexId s = 0; s < n_; ++s)
            if (parent_edge_[s] == kNone && height_[s] == 0)
                if (!dfs_test(s)) return false;
        return true;
    }

private:
    static constexpr int kNone = -1;

    struct Interval {
        int low = kNone;
        int high = kNone;
        bool empty() const { return low == kNone && high == kNone; }
    };
    struct ConflictPair {
        Interval left, right;
    };

    void dfs_orient(VertexId v) {
        EdgeId e = parent_edge_[v];
        for (auto [w, id] : inc_[v]) {
            if (src_[id] != kNone) continue;  // already oriented
            src_[id] = v;
            dst_[id] = w;
            out_[v].push_back(id);
            lowpt_[id] = height_[v];
            lowpt2_[id] = height_[v];
            if (height_[w] == -1) {
                parent_edge_[w] = id;
                height_[w] = height_[v] + 1;
                dfs_orient(w);
            } else {
                lowpt_[id] = height_[w];  // back edge
            }
            nesting_depth_[id] = 2 * lowpt_[id];
            if (lowpt2_[id] < height_[v]) ++nesting_depth_[id];  // chordal
            if (e != kNone) {
                if (lowpt_[id] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[id]);
                    lowpt_[e] = lowpt_[id];
                } else if (lowpt_[id] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[id]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[id]);
                }
            }
        }
    }

    bool interval_conflicts(const Interval& i, EdgeId b) const {
        return !i.empty() && lowpt_[i.high] > lowpt_[b];
    }

    int pair_lowest(const ConflictPair& p) const {
        if (p.left.empty()) return lowpt_[p.right.low];
        if (p.right.empty()) return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    bool dfs_test(VertexId v) {
        EdgeId e = parent_edge_[v];
        bool first = true;
        for (EdgeId id : out_[v]) {
            stack_bottom_[id] = stack_.size();
            if (id == parent_edge_[dst_[id]]) {
                if (!dfs_test(dst_[id])) return false;
            } else {
                lowpt_edge_[id] = id;
                stack_.push_back(ConflictPair{Interval{}, Interval{id, id}});
            }
            if (lowpt_[id] < height_[v]) {  // id has a return edge below v
                if (first) {
                    if (e != kNone) lowpt_edge_[e] = lowpt_edge_[id];
                } else if (!add_constraints(id, e)) {
                    return false;
                }
            }
            first = false;
        }
        if (e != kNone) {
            VertexId u = src_[e];
            trim_back_edges(u);
            if (lowpt_[e] < height_[u] && !stack_.empty()) {
                int hl = stack_.back().left.high;
                int hr = stack_.back().right.high;
                if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
                    ref_[e] = hl;
                else
                    ref_[e] = hr;
            }
        }
        return true;
    }

    bool add_constraints(EdgeId ei, EdgeId e) {
        ConflictPair p;
        // Merge return edges of ei into p.right.
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty()) std::swap(q.left, q.right);
            if (!q.left.empty()) return false;
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty())
                    p.right.high = q.right.high;
                else
                    ref_[p.right.low] = q.right.high;
                p.right.low = q.right.low;
            } else {
                ref_[q.right.low] = lowpt_edge_[e];  // aligned at lowpt(e)
            }
        } while (stack_.size() != stack_bottom_[ei]);
        // Merge return edges of earlier siblings that conflict with ei into
        // p.left.
        while (!stack_.empty() && (interval_conflicts(stack_.back().left, ei) ||
                                   interval_conflicts(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (interval_conflicts(q.right, ei)) std::swap(q.left, q.right);
            if (interval_conflicts(q.right, ei)) return false;
            if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
            if (q.right.low != kNone) p.right.low = q.right.low;
            if (p.left.empty())
                p.left.high = q.left.high;
            else
                ref_[p.left.low] = q.left.high;
            p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
        return true;
    }

    void trim_back_edges(VertexId u) {
        // Whole pairs returning only to u go away.
        while (!stack_.empty() && pair_lowest(stack_.back()) == height_[u])
            stack_.pop_back();
        if (stack_.empty()) return;
        ConflictPair p = stack_.back();
        stack_.pop_back();
        while (p.left.high != kNone && dst_[p.left.high] == u)
            p.left.high = ref_[p.left.high];
        if (p.left.high == kNone && p.left.low != kNone) {
            ref_[p.left.low] = p.right.low;
            p.left.low = kNone;
        }
        while (p.right.high != kNone && dst_[p.right.high] == u)
            p.right.high = ref_[p.right.high];
        if (p.right.high == kNone && p.right.low != kNone) {
            ref_[p.right.low] = p.left.low;
            p.right.low = kNone;
        }
        stack_.push_back(p);
    }

    int n_, m_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> inc_;
    std::vector<int> height_, parent_edge_, src_, dst_;
    std::vector<int> lowpt_, lowpt2_, nesting_depth_, ref_, lowpt_edge_;
    std::vector<std::size_t> stack_bottom_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<ConflictPair> stack_;
};

}  // namespace lr_detail

/// Planarity of the multigraph; loops and parallel edges never matter, so
/// the test runs on the simple support.
inline bool is_planar(const MultiGraph& g) {
    MultiGraph s = simplified(g);
    int n = s.vertex_count(), m = s.edge_count();
    if (n <= 4 || m <= 4) return true;
    if (m > 3 * n - 6) return false;
    return lr_detail::LRTester(s).planar();
}

}  // namespace tilecross
