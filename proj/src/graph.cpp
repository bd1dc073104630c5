#include "cosmotope/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cosmo {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 1) throw ValidationError("vertex count must be positive");
    adj_.assign((size_t)n_ + 1, {});
    for (auto& e : edges_) {
        if (e.first < 1 || e.first > n_ || e.second < 1 || e.second > n_)
            throw ValidationError("edge endpoint out of range");
        if (e.first == e.second) throw ValidationError("self-loop");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (edge_ix_.count(e)) throw ValidationError("duplicate edge");
        edge_ix_[e] = (int)(&e - edges_.data());
        adj_[(size_t)e.first].push_back(e.second);
        adj_[(size_t)e.second].push_back(e.first);
    }
    std::vector<bool> seen((size_t)n_ + 1, false);
    std::vector<int> stack = {1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[(size_t)v])
            if (!seen[(size_t)w]) { seen[(size_t)w] = true; ++reached; stack.push_back(w); }
    }
    if (reached != n_) throw ValidationError("graph is disconnected");
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edge_ix_.find({u, v});
    return it == edge_ix_.end() ? -1 : it->second;
}

bool Graph::is_canonical_path() const {
    if ((int)edges_.size() != n_ - 1) return false;
    for (int i = 1; i < n_; ++i)
        if (!has_edge(i, i + 1)) return false;
    return true;
}

bool Graph::is_canonical_cycle() const {
    if (n_ < 3 || (int)edges_.size() != n_) return false;
    for (int i = 1; i < n_; ++i)
        if (!has_edge(i, i + 1)) return false;
    return has_edge(n_, 1);
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    return Graph(vertex_count, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw ValidationError("path needs at least one edge");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i) e.push_back({i, i + 1});
    return Graph(n + 1, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw ValidationError("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    e.push_back({n, 1});
    return Graph(n, e);
}

Graph star_graph(int n) {
    if (n < 1) throw ValidationError("star needs at least one edge");
    std::vector<std::pair<int, int>> e = {{1, 2}};
    for (int i = 3; i <= n + 1; ++i) e.push_back({2, i});
    return Graph(n + 1, e);
}

DirectedEdgeSet make_directed_edge_set(const Graph& g, std::vector<std::pair<int, int>> edges) {
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges) {
        if (!g.has_edge(e.first, e.second))
            throw ValidationError("directed edge not in host graph");
        auto key = std::minmax(e.first, e.second);
        if (!seen.insert({key.first, key.second}).second)
            throw ValidationError("edge appears twice in directed edge set");
    }
    return DirectedEdgeSet{std::move(edges)};
}

int signed_degree(const DirectedEdgeSet& d, int v) {
    int deg = 0;
    for (auto& e : d.edges) {
        if (e.first == v) ++deg;
        if (e.second == v) --deg;
    }
    return deg;
}

std::vector<std::vector<int>> enumerate_simple_paths(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<bool> used((size_t)g.vertex_count() + 1, false);
    std::function<void()> extend = [&]() {
        int tail = path.back();
        if (path.size() >= 3 && path.front() < tail)
            out.push_back(path);
        for (int w : g.neighbors(tail)) {
            if (used[(size_t)w]) continue;
            used[(size_t)w] = true;
            path.push_back(w);
            extend();
            path.pop_back();
            used[(size_t)w] = false;
        }
    };
    for (int s = 1; s <= g.vertex_count(); ++s) {
        used[(size_t)s] = true;
        path = {s};
        extend();
        used[(size_t)s] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> enumerate_simple_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<bool> used((size_t)g.vertex_count() + 1, false);
    // Grow paths whose vertices all exceed the start; close back to it.
    std::function<void(int)> extend = [&](int start) {
        int tail = path.back();
        for (int w : g.neighbors(tail)) {
            if (w == start && path.size() >= 3 && path[1] < path.back())
                out.push_back(path);
            if (w <= start || used[(size_t)w]) continue;
            used[(size_t)w] = true;
            path.push_back(w);
            extend(start);
            path.pop_back();
            used[(size_t)w] = false;
        }
    };
    for (int s = 1; s <= g.vertex_count(); ++s) {
        path = {s};
        extend(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RootedTree::RootedTree(Graph tree, int root) : tree_(std::move(tree)), root_(root) {
    int n = tree_.vertex_count();
    if (!tree_.is_tree()) throw ValidationError("input is not a tree");
    if (root < 1 || root > n) throw ValidationError("root out of range");
    if (!tree_.is_leaf(root)) throw ValidationError("root must be a leaf");

    parent_.assign((size_t)n + 1, 0);
    depth_.assign((size_t)n + 1, 0);
    children_.assign((size_t)n + 1, {});
    vertex_rank_.assign((size_t)n + 1, 0);

    // Floret construction: walk vertices in the order built so far and
    // append each one's children sorted by index.
    std::vector<bool> seen((size_t)n + 1, false);
    vertex_order_ = {root_};
    seen[(size_t)root_] = true;
    for (size_t head = 0; head < vertex_order_.size(); ++head) {
        int v = vertex_order_[head];
        std::vector<int> kids;
        for (int w : tree_.neighbors(v))
            if (!seen[(size_t)w]) kids.push_back(w);
        std::sort(kids.begin(), kids.end());
        for (int w : kids) {
            seen[(size_t)w] = true;
            parent_[(size_t)w] = v;
            depth_[(size_t)w] = depth_[(size_t)v] + 1;
            children_[(size_t)v].push_back(w);
            vertex_order_.push_back(w);
        }
    }
    for (int r = 0; r < n; ++r) vertex_rank_[(size_t)vertex_order_[(size_t)r]] = r;

    for (auto& e : tree_.edges()) {
        int p = e.first, c = e.second;
        if (parent_[(size_t)p] == c) std::swap(p, c);
        edge_order_.push_back({p, c});
    }
    std::sort(edge_order_.begin(), edge_order_.end(),
              [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                  return pair_less(a, b);
              });
    edge_rank_.assign((size_t)n, 0);
    for (size_t r = 0; r < edge_order_.size(); ++r) {
        auto& e = edge_order_[r];
        edge_rank_[(size_t)tree_.edge_index(e.first, e.second)] = (int)r;
    }
}

bool RootedTree::pair_less(std::pair<int, int> a, std::pair<int, int> b) const {
    if (a.first != b.first) return less(a.first, b.first);
    return less(a.second, b.second);
}

std::vector<int> RootedTree::path_between(int u, int v) const {
    std::vector<int> up = {u}, down = {v};
    int a = u, b = v;
    while (a != b) {
        if (depth_[(size_t)a] >= depth_[(size_t)b]) { a = parent_[(size_t)a]; up.push_back(a); }
        else { b = parent_[(size_t)b]; down.push_back(b); }
    }
    down.pop_back();
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

RootedTree root_order(const Graph& t, int root) { return RootedTree(t, root); }

bool covers(const RootedTree& rt, int i, int j) {
    if (!rt.less(i, j)) return false;
    for (int v = rt.parent(j); v != 0; v = rt.parent(v))
        if (rt.less(i, v)) return false;
    return true;
}

}  // namespace cosmo
