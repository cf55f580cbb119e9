#include <catch2/catch_amalgamated.hpp>

#include "tilecross/multigraph.hpp"

using tilecross::MultiGraph;

TEST_CASE("multigraph stores edges by id") {
    MultiGraph g(3);
    CHECK(g.add_edge(0, 1) == 0);
    CHECK(g.add_edge(1, 2) == 1);
    CHECK(g.add_edge(1, 2) == 2);
    CHECK(g.add_edge(2, 2) == 3);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 4);
    CHECK(g.endpoints(2) == std::make_pair(1, 2));
    CHECK(g.is_loop(3));
    CHECK_FALSE(g.is_loop(0));
    CHECK(g.degree(2) == 4);  // loop counts twice
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.endpoints(4), std::invalid_argument);
}

TEST_CASE("edge adjacency includes shared endpoints and loops") {
    MultiGraph g(4);
    int a = g.add_edge(0, 1);
    int b = g.add_edge(1, 2);
    int c = g.add_edge(2, 3);
    int l = g.add_edge(0, 0);
    CHECK(g.adjacent_edges(a, b));
    CHECK_FALSE(g.adjacent_edges(a, c));
    CHECK(g.adjacent_edges(a, l));
    CHECK_FALSE(g.adjacent_edges(b, l));
    CHECK(g.adjacent_edges(a, a));
}

TEST_CASE("components numbered by smallest vertex") {
    MultiGraph g(6);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    auto cm = tilecross::components(g);
    CHECK(cm.count == 4);
    CHECK(cm.component_of == std::vector<int>{0, 1, 0, 2, 2, 3});

    MultiGraph empty(0);
    CHECK(tilecross::components(empty).count == 0);
}

TEST_CASE("simplified drops loops and parallel classes") {
    MultiGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(1, 1);
    g.add_edge(1, 2);
    auto s = tilecross::simplified(g);
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_count() == 2);
    CHECK(s.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

#include <random>
#include <set>

#include "fixtures.hpp"
#include "path_bruteforce.hpp"
#include "tilecross/flows.hpp"
#include "tilecross/isomorphism.hpp"

using tilecross::EdgeCut;
using tilecross::PathSystem;
using tilecross::SearchStatus;

namespace {

// Walks must follow incidences, be pairwise edge-disjoint, and join the
// required endpoints.
void require_valid_system(const MultiGraph& g, const PathSystem& sys,
                          const std::vector<std::pair<int, int>>& endpoints) {
    REQUIRE(sys.paths.size() == endpoints.size());
    std::set<int> used;
    for (std::size_t i = 0; i < sys.paths.size(); ++i) {
        const auto& w = sys.paths[i];
        REQUIRE(w.vertices.size() == w.edges.size() + 1);
        REQUIRE(w.vertices.front() == endpoints[i].first);
        REQUIRE(w.vertices.back() == endpoints[i].second);
        for (std::size_t j = 0; j < w.edges.size(); ++j) {
            auto [u, v] = g.endpoints(w.edges[j]);
            bool forward = u == w.vertices[j] && v == w.vertices[j + 1];
            bool backward = v == w.vertices[j] && u == w.vertices[j + 1];
            REQUIRE((forward || backward));
            REQUIRE(used.insert(w.edges[j]).second);
        }
    }
}

bool disconnects(const MultiGraph& g, const std::set<int>& removed, int s, int t) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : g.incidence()[v])
            if (!removed.count(e) && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return !seen[t];
}

}  // namespace

TEST_CASE("min cut on a single edge") {
    auto g = fixtures::from_edges(2, {{0, 1}});
    auto cut = tilecross::min_edge_cut(g, 0, 1);
    CHECK(cut.size() == 1);
    CHECK(cut.edges == std::vector<int>{0});
    CHECK(cut.side_s == std::vector<int>{0});
}

TEST_CASE("min cut positions and duality on K4") {
    auto g = fixtures::complete(4);
    auto cut = tilecross::min_edge_cut(g, 0, 3);
    REQUIRE(cut.size() == 3);
    std::set<int> cut_set(cut.edges.begin(), cut.edges.end());
    CHECK(disconnects(g, cut_set, 0, 3));

    // No set of fewer than 3 edges separates them.
    int m = g.edge_count();
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            std::set<int> sub = {a, b};
            CHECK_FALSE(disconnects(g, sub, 0, 3));
        }

    auto sys = tilecross::edge_disjoint_paths(g, 0, 3, 3);
    require_valid_system(g, sys, {{0, 3}, {0, 3}, {0, 3}});
    CHECK_THROWS_AS(tilecross::edge_disjoint_paths(g, 0, 3, 4), std::invalid_argument);
}

TEST_CASE("min cut across components and degenerate calls") {
    MultiGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto cut = tilecross::min_edge_cut(g, 0, 2);
    CHECK(cut.size() == 0);
    CHECK(cut.side_s == std::vector<int>{0, 1});
    CHECK_THROWS_AS(tilecross::min_edge_cut(g, 1, 1), std::invalid_argument);
}

TEST_CASE("parallel edges carry separate paths") {
    MultiGraph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    auto sys = tilecross::edge_disjoint_paths(g, 0, 1, 2);
    require_valid_system(g, sys, {{0, 1}, {0, 1}});
    CHECK(sys.paths[0].edges != sys.paths[1].edges);
}

TEST_CASE("cut validity and Menger duality on random multigraphs") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = fixtures::random_multigraph(rng, 7, 16);
        if (g.vertex_count() < 2) continue;
        std::uniform_int_distribution<int> vd(0, g.vertex_count() - 1);
        int s = vd(rng), t = vd(rng);
        if (s == t) continue;
        auto cut = tilecross::min_edge_cut(g, s, t);
        std::set<int> cut_set(cut.edges.begin(), cut.edges.end());
        REQUIRE(disconnects(g, cut_set, s, t));
        // Every proper subset leaves s and t connected.
        for (int drop : cut.edges) {
            std::set<int> sub = cut_set;
            sub.erase(drop);
            REQUIRE_FALSE(disconnects(g, sub, s, t));
        }
        // Exactly cut.size() edge-disjoint paths exist.
        auto sys = tilecross::edge_disjoint_paths(g, s, t, cut.size());
        require_valid_system(
            g, sys, std::vector<std::pair<int, int>>(cut.size(), {s, t}));
        REQUIRE_THROWS_AS(tilecross::edge_disjoint_paths(g, s, t, cut.size() + 1),
                          std::invalid_argument);
    }
}

TEST_CASE("paired paths on hand-checked examples") {
    // Empty request.
    MultiGraph g0(1);
    auto r0 = tilecross::paired_edge_disjoint_paths(g0, {});
    CHECK(r0.status == SearchStatus::Feasible);
    CHECK(r0.paths.paths.empty());

    // Unique path through the middle of a 3-path.
    auto p3 = fixtures::path(3);
    auto r1 = tilecross::paired_edge_disjoint_paths(p3, {{0, 2}});
    REQUIRE(r1.status == SearchStatus::Feasible);
    require_valid_system(p3, r1.paths, {{0, 2}});
    CHECK(r1.paths.paths[0].vertices == std::vector<int>{0, 1, 2});

    // Star: center 3, leaves 0,1,2; both requests route through the center.
    auto star = fixtures::from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
    auto r2 = tilecross::paired_edge_disjoint_paths(star, {{0, 1}, {2, 3}});
    REQUIRE(r2.status == SearchStatus::Feasible);
    require_valid_system(star, r2.paths, {{0, 1}, {2, 3}});

    // Two edge-disjoint 0-2 paths cannot fit in a 3-path.
    auto r3 = tilecross::paired_edge_disjoint_paths(p3, {{0, 2}, {0, 2}});
    CHECK(r3.status == SearchStatus::Infeasible);

    // Identical endpoints are a zero-length path.
    auto r4 = tilecross::paired_edge_disjoint_paths(p3, {{1, 1}, {0, 2}});
    REQUIRE(r4.status == SearchStatus::Feasible);
    CHECK(r4.paths.paths[0].vertices == std::vector<int>{1});
    CHECK(r4.paths.paths[0].edges.empty());
}

TEST_CASE("paired paths match the brute-force oracle") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = fixtures::random_multigraph(rng, 6, 10);
        std::uniform_int_distribution<int> vd(0, g.vertex_count() - 1);
        std::uniform_int_distribution<int> kd(1, 3);
        int k = kd(rng);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < k; ++i) pairs.emplace_back(vd(rng), vd(rng));
        auto res = tilecross::paired_edge_disjoint_paths(g, pairs);
        REQUIRE(res.status != SearchStatus::Unknown);
        bool expected = oracles::brute_paired_paths_feasible(g, pairs);
        REQUIRE((res.status == SearchStatus::Feasible) == expected);
        if (res.status == SearchStatus::Feasible)
            require_valid_system(g, res.paths, pairs);
    }
}

TEST_CASE("paired path search respects its budget") {
    auto g = fixtures::complete(6);
    auto res = tilecross::paired_edge_disjoint_paths(g, {{0, 5}, {1, 4}, {2, 3}}, 3);
    CHECK(res.status == SearchStatus::Unknown);
}

TEST_CASE("isomorphism on hand-picked pairs") {
    auto c4 = fixtures::cycle(4);
    auto p4 = fixtures::path(4);
    CHECK(tilecross::are_isomorphic(c4, c4));
    CHECK_FALSE(tilecross::are_isomorphic(c4, p4));

    auto c6 = fixtures::cycle(6);
    MultiGraph two_triangles(6);
    for (int base : {0, 3}) {
        two_triangles.add_edge(base, base + 1);
        two_triangles.add_edge(base + 1, base + 2);
        two_triangles.add_edge(base + 2, base);
    }
    CHECK_FALSE(tilecross::are_isomorphic(c6, two_triangles));

    // Same degree sequence, loops vs parallels.
    MultiGraph loopy(2);
    loopy.add_edge(0, 0);
    loopy.add_edge(1, 1);
    MultiGraph doubled(2);
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    CHECK_FALSE(tilecross::are_isomorphic(loopy, doubled));
}

TEST_CASE("isomorphism found under relabeling, broken by edits") {
    std::mt19937 rng(91);
    for (int trial = 0; trial < 120; ++trial) {
        auto g = fixtures::random_multigraph(rng, 8, 14);
        auto h = fixtures::shuffled_copy(g, rng);
        REQUIRE(tilecross::are_isomorphic(g, h));
        REQUIRE(tilecross::are_isomorphic(h, g));
        if (g.vertex_count() >= 2) {
            auto damaged = h;
            damaged.add_edge(0, g.vertex_count() - 1);
            REQUIRE_FALSE(tilecross::are_isomorphic(g, damaged));
        }
    }
}
