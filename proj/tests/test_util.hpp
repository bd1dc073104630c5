#ifndef COSMOTOPE_TEST_UTIL_HPP
#define COSMOTOPE_TEST_UTIL_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cosmotope/facet_rules.hpp"

namespace cosmo::testutil {

// All labeled trees on n vertices from Prufer sequences, deduplicated by a
// canonical form so each unlabeled tree appears once.
inline std::vector<Graph> all_trees(int n) {
    if (n == 1) return {};
    if (n == 2) return {path_graph(1)};
    auto from_prufer = [&](const std::vector<int>& code) {
        std::vector<int> degree((size_t)n + 1, 1);
        for (int v : code) degree[(size_t)v] += 1;
        std::set<int> leaves;
        for (int v = 1; v <= n; ++v)
            if (degree[(size_t)v] == 1) leaves.insert(v);
        std::vector<std::pair<int, int>> edges;
        std::vector<int> work = code;
        for (int v : work) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back({std::min(leaf, v), std::max(leaf, v)});
            if (--degree[(size_t)v] == 1) leaves.insert(v);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.push_back({std::min(a, b), std::max(a, b)});
        return edges;
    };
    // canonical string via rooted subtree encodings from the centroid(s)
    std::function<std::string(const std::vector<std::vector<int>>&, int, int)> encode =
        [&](const std::vector<std::vector<int>>& adj, int v, int parent) {
            std::vector<std::string> kids;
            for (int w : adj[(size_t)v])
                if (w != parent) kids.push_back(encode(adj, w, v));
            std::sort(kids.begin(), kids.end());
            std::string s = "(";
            for (auto& k : kids) s += k;
            return s + ")";
        };
    auto canonical = [&](const std::vector<std::pair<int, int>>& edges) {
        std::vector<std::vector<int>> adj((size_t)n + 1);
        for (auto& [a, b] : edges) {
            adj[(size_t)a].push_back(b);
            adj[(size_t)b].push_back(a);
        }
        std::function<int(int, int)> count = [&](int u, int p) -> int {
            int c = 1;
            for (int x : adj[(size_t)u])
                if (x != p) c += count(x, u);
            return c;
        };
        // centroids: vertices minimizing the largest remaining component
        std::vector<int> best;
        int best_score = n + 1;
        for (int v = 1; v <= n; ++v) {
            int mx = 0;
            for (int w : adj[(size_t)v]) mx = std::max(mx, count(w, v));
            if (mx < best_score) {
                best_score = mx;
                best = {v};
            } else if (mx == best_score) {
                best.push_back(v);
            }
        }
        std::string s = "z";
        for (int c : best) s = std::min(s, encode(adj, c, 0));
        return s;
    };
    std::map<std::string, Graph> reps;
    std::vector<int> code((size_t)n - 2, 1);
    while (true) {
        auto edges = from_prufer(code);
        std::string key = canonical(edges);
        if (!reps.count(key)) reps.emplace(key, Graph(n, edges));
        int i = (int)code.size() - 1;
        while (i >= 0 && code[(size_t)i] == n) {
            code[(size_t)i] = 1;
            --i;
        }
        if (i < 0) break;
        code[(size_t)i] += 1;
    }
    std::vector<Graph> out;
    for (auto& [k, g] : reps) out.push_back(g);
    return out;
}

inline std::vector<int> leaves_of(const Graph& g) {
    std::vector<int> out;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.is_leaf(v)) out.push_back(v);
    return out;
}

// 6-vertex spider: center 2 with legs 1, 3-4 and 5-6.
inline Graph spider6() {
    return build_graph(6, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}});
}

// The worked 25-vertex tree whose rooted order at 1 is the natural order.
inline Graph worked_tree25() {
    return build_graph(25, {{1, 2},   {2, 3},   {2, 4},   {3, 5},   {4, 6},   {4, 7},
                            {4, 8},   {5, 9},   {6, 10},  {7, 11},  {7, 12},  {8, 13},
                            {12, 14}, {12, 15}, {13, 16}, {16, 17}, {16, 18}, {17, 19},
                            {18, 20}, {19, 21}, {19, 22}, {19, 23}, {20, 24}, {20, 25}});
}

// The decorated facet on worked_tree25 used by the worked examples.
inline GenSet worked_tree25_facet(const GeneratorTable& table) {
    const Graph& g = table.graph();
    GenSet s;
    for (int v : {6, 7, 10, 11, 13, 14, 21, 22, 23, 24, 25}) s.push_back(table.z_vertex(v));
    auto dbl = [&](int from, int to) {
        s.push_back(table.z_edge(g.edge_index(from, to)));
        s.push_back(table.y_directed(from, to));
    };
    auto single_z = [&](int a, int b) { s.push_back(table.z_edge(g.edge_index(a, b))); };
    auto single_t = [&](int a, int b) { s.push_back(table.t_edge(g.edge_index(a, b))); };
    auto single_y = [&](int from, int to) { s.push_back(table.y_directed(from, to)); };
    dbl(2, 1);
    dbl(3, 2);
    dbl(4, 2);
    dbl(5, 3);
    single_y(6, 4);
    dbl(7, 4);
    single_t(4, 8);
    dbl(5, 9);
    single_t(6, 10);
    single_z(7, 11);
    single_t(7, 12);
    dbl(13, 8);
    dbl(14, 12);
    dbl(12, 15);
    single_z(13, 16);
    dbl(17, 16);
    dbl(16, 18);
    dbl(19, 17);
    dbl(20, 18);
    single_t(19, 21);
    dbl(22, 19);
    single_z(19, 23);
    single_y(24, 20);
    single_t(20, 25);
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace cosmo::testutil

#endif
