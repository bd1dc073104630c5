#ifndef COSMOTOPE_GRAPH_HPP
#define COSMOTOPE_GRAPH_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cosmo {

// Input or shape problems; the CLI reports these as usage-level failures.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation guard tripped (size limits of the exact algorithms).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Connected simple undirected graph, vertices 1..n.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    // Edge endpoints stored with the smaller vertex first.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[(size_t)v]; }

    int edge_index(int u, int v) const;           // -1 when absent
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    bool is_tree() const { return (int)edges_.size() == n_ - 1; }
    bool is_leaf(int v) const { return adj_[(size_t)v].size() == 1; }
    // Path graph labeled 1-2-...-n along consecutive indices.
    bool is_canonical_path() const;
    // Cycle graph labeled 1-2-...-n-1 cyclically.
    bool is_canonical_cycle() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;           // 1-based, adj_[0] unused
    std::map<std::pair<int, int>, int> edge_ix_;
};

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

// Builtins used throughout: path with n edges on [n+1], cycle on [n],
// star with n edges (center 2, leaves 1,3,...,n+1).
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);

// Orientations of distinct host edges.
struct DirectedEdgeSet {
    std::vector<std::pair<int, int>> edges;  // (tail, head)
};

DirectedEdgeSet make_directed_edge_set(const Graph& g, std::vector<std::pair<int, int>> edges);
int signed_degree(const DirectedEdgeSet& d, int v);  // outdeg - indeg

// All simple paths with >= 2 edges, one per undirected path, smaller
// endpoint first, sorted lexicographically.
std::vector<std::vector<int>> enumerate_simple_paths(const Graph& g);

// All simple cycles, one per cycle up to rotation/reflection: smallest
// vertex first, smaller of its two cycle neighbors second.
std::vector<std::vector<int>> enumerate_simple_cycles(const Graph& g);

// A tree rooted at a leaf, carrying the level-wise vertex order and the
// induced order on parent->child edges.
class RootedTree {
public:
    RootedTree(Graph tree, int root);

    const Graph& tree() const { return tree_; }
    int root() const { return root_; }
    int parent(int v) const { return parent_[(size_t)v]; }  // 0 for the root
    int depth(int v) const { return depth_[(size_t)v]; }
    const std::vector<int>& children(int v) const { return children_[(size_t)v]; }

    // vertex_order()[k] is the (k+1)-st smallest vertex.
    const std::vector<int>& vertex_order() const { return vertex_order_; }
    int vertex_rank(int v) const { return vertex_rank_[(size_t)v]; }
    bool less(int u, int v) const { return vertex_rank_[(size_t)u] < vertex_rank_[(size_t)v]; }

    // Directed parent->child edges sorted by the edge order; edge_rank is
    // indexed by the undirected edge index of the host tree.
    const std::vector<std::pair<int, int>>& edge_order() const { return edge_order_; }
    int edge_rank(int edge_ix) const { return edge_rank_[(size_t)edge_ix]; }

    // Lexicographic comparison of arbitrary ordered vertex pairs by rank.
    bool pair_less(std::pair<int, int> a, std::pair<int, int> b) const;

    // Unique tree path between two vertices, endpoints included.
    std::vector<int> path_between(int u, int v) const;

private:
    Graph tree_;
    int root_;
    std::vector<int> parent_, depth_, vertex_order_, vertex_rank_, edge_rank_;
    std::vector<std::vector<int>> children_;
    std::vector<std::pair<int, int>> edge_order_;
};

RootedTree root_order(const Graph& t, int root);

// True iff i < j in the tree order and no vertex on the path from j to the
// root (j itself excluded) exceeds i.
bool covers(const RootedTree& rt, int i, int j);

}  // namespace cosmo

#endif
