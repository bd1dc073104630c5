#include <doctest.h>

#include <set>

#include "test_util.hpp"

using namespace cosmo;
using namespace cosmo::testutil;

TEST_CASE("graph validation") {
    CHECK(build_graph(2, {{1, 2}}).edge_count() == 1);
    CHECK(build_graph(3, {{1, 2}, {2, 3}, {3, 1}}).is_canonical_cycle());
    CHECK_THROWS_WITH_AS(build_graph(3, {{1, 2}}), "graph is disconnected", ValidationError);
    CHECK_THROWS_WITH_AS(build_graph(2, {{1, 1}}), "self-loop", ValidationError);
    CHECK_THROWS_WITH_AS(build_graph(2, {{1, 2}, {2, 1}}), "duplicate edge", ValidationError);
    CHECK_THROWS_WITH_AS(build_graph(2, {{1, 3}}), "edge endpoint out of range", ValidationError);
}

namespace {

// brute force over injective vertex sequences
int brute_path_count(const Graph& g) {
    int n = g.vertex_count();
    long long count = 0;
    std::vector<int> seq;
    std::vector<bool> used((size_t)n + 1, false);
    std::function<void()> rec = [&]() {
        if (seq.size() >= 3) ++count;
        int tail = seq.back();
        for (int w = 1; w <= n; ++w) {
            if (used[(size_t)w] || !g.has_edge(tail, w)) continue;
            used[(size_t)w] = true;
            seq.push_back(w);
            rec();
            seq.pop_back();
            used[(size_t)w] = false;
        }
    };
    for (int s = 1; s <= n; ++s) {
        used[(size_t)s] = true;
        seq = {s};
        rec();
        used[(size_t)s] = false;
    }
    return (int)(count / 2);  // each path traversed both ways
}

int brute_cycle_count(const Graph& g) {
    int n = g.vertex_count();
    long long closed = 0;
    std::vector<int> seq;
    std::vector<bool> used((size_t)n + 1, false);
    std::function<void()> rec = [&]() {
        int tail = seq.back();
        for (int w = 1; w <= n; ++w) {
            if (w == seq.front() && seq.size() >= 3 && g.has_edge(tail, w)) ++closed;
            if (used[(size_t)w] || !g.has_edge(tail, w)) continue;
            used[(size_t)w] = true;
            seq.push_back(w);
            rec();
            seq.pop_back();
            used[(size_t)w] = false;
        }
    };
    for (int s = 1; s <= n; ++s) {
        used[(size_t)s] = true;
        seq = {s};
        rec();
        used[(size_t)s] = false;
    }
    // every cycle of length k is counted k times per direction
    // so sum over cycles of 2k = closed; count cycles directly instead
    return (int)closed;
}

}  // namespace

TEST_CASE("simple path enumeration") {
    CHECK(enumerate_simple_paths(path_graph(1)).empty());
    CHECK(enumerate_simple_paths(path_graph(2)) == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(enumerate_simple_paths(cycle_graph(3)) ==
          std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}});
    std::vector<Graph> graphs = {path_graph(4), cycle_graph(5), star_graph(4), spider6(),
                                 build_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}}),
                                 build_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
                                 build_graph(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                                 {7, 1}, {2, 6}})};
    for (const Graph& g : graphs) {
        auto paths = enumerate_simple_paths(g);
        CHECK((int)paths.size() == brute_path_count(g));
        std::set<std::vector<int>> dedup(paths.begin(), paths.end());
        CHECK(dedup.size() == paths.size());
        for (auto& p : paths) {
            CHECK(p.front() < p.back());
            for (size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
        }
    }
}

TEST_CASE("simple cycle enumeration") {
    CHECK(enumerate_simple_cycles(path_graph(4)).empty());
    CHECK(enumerate_simple_cycles(star_graph(5)).empty());
    CHECK(enumerate_simple_cycles(cycle_graph(3)) == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(enumerate_simple_cycles(cycle_graph(4)) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    std::vector<Graph> graphs = {cycle_graph(6),
                                 build_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}}),
                                 build_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
                                 build_graph(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                                 {7, 1}, {2, 6}})};
    for (const Graph& g : graphs) {
        auto cycles = enumerate_simple_cycles(g);
        long long weighted = 0;
        for (auto& c : cycles) {
            weighted += 2 * (long long)c.size();  // rotations x directions
            CHECK(c.front() == *std::min_element(c.begin(), c.end()));
            CHECK(c[1] < c.back());
            for (size_t i = 0; i < c.size(); ++i)
                CHECK(g.has_edge(c[i], c[(i + 1) % c.size()]));
        }
        CHECK(weighted == brute_cycle_count(g));
    }
}

TEST_CASE("signed degree") {
    Graph g = build_graph(4, {{1, 2}, {2, 3}, {2, 4}});
    auto d1 = make_directed_edge_set(g, {{1, 2}});
    CHECK(signed_degree(d1, 1) == 1);
    CHECK(signed_degree(d1, 2) == -1);
    auto d2 = make_directed_edge_set(g, {{1, 2}, {3, 2}, {2, 4}});
    CHECK(signed_degree(d2, 2) == -1);
    CHECK_THROWS_AS(make_directed_edge_set(g, {{1, 3}}), ValidationError);
    CHECK_THROWS_AS(make_directed_edge_set(g, {{1, 2}, {2, 1}}), ValidationError);
}

TEST_CASE("rooted order on small trees") {
    RootedTree p = root_order(path_graph(2), 1);
    CHECK(p.vertex_order() == std::vector<int>{1, 2, 3});

    RootedTree s = root_order(star_graph(3), 1);
    CHECK(s.vertex_order() == std::vector<int>{1, 2, 3, 4});

    CHECK_THROWS_AS(root_order(star_graph(3), 2), ValidationError);     // not a leaf
    CHECK_THROWS_AS(root_order(cycle_graph(4), 1), ValidationError);    // not a tree

    RootedTree big = root_order(worked_tree25(), 1);
    std::vector<int> natural(25);
    for (int i = 0; i < 25; ++i) natural[(size_t)i] = i + 1;
    CHECK(big.vertex_order() == natural);
}

TEST_CASE("rooted order is a linear extension of depth") {
    for (int n = 2; n <= 8; ++n) {
        for (const Graph& t : all_trees(n)) {
            for (int r : leaves_of(t)) {
                RootedTree rt = root_order(t, r);
                for (int u = 1; u <= n; ++u)
                    for (int v = 1; v <= n; ++v)
                        if (rt.depth(u) < rt.depth(v)) CHECK(rt.less(u, v));
            }
        }
    }
}

TEST_CASE("covers") {
    RootedTree big = root_order(worked_tree25(), 1);
    CHECK(covers(big, 23, 24));
    CHECK(covers(big, 23, 25));
    RootedTree p = root_order(path_graph(2), 1);
    CHECK(covers(p, 2, 3));
    CHECK_FALSE(covers(p, 3, 2));
}

TEST_CASE("largest edge on the path between comparable vertices") {
    // for i < j, the first edge directed out of i precedes the last edge
    // directed into j whenever the path has at least two edges
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& t : all_trees(n)) {
            for (int r : leaves_of(t)) {
                RootedTree rt = root_order(t, r);
                for (int i = 1; i <= n; ++i) {
                    for (int j = 1; j <= n; ++j) {
                        if (i == j || !rt.less(i, j)) continue;
                        auto path = rt.path_between(i, j);
                        if (path.size() < 3) continue;
                        auto first = std::make_pair(path[1], path[0]);
                        auto last = std::make_pair(path[path.size() - 2], path.back());
                        CHECK(rt.pair_less(first, last));
                    }
                }
            }
        }
    }
}
