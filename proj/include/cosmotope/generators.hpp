#ifndef COSMOTOPE_GENERATORS_HPP
#define COSMOTOPE_GENERATORS_HPP

// The |V| + 4|E| ring generators of a graph and their lattice points.
// Ids follow the canonical order: z-vertex, z-edge, y (per edge, forward
// then backward), t. Coordinates live in Z^{V+E}: vertex v at v-1, edge e
// at |V|+e.

#include <string>
#include <utility>
#include <vector>

#include "cosmotope/graph.hpp"

namespace cosmo {

using IntVec = std::vector<long long>;

enum class GenTag { ZVertex, ZEdge, Y, T };

class GeneratorTable {
public:
    explicit GeneratorTable(Graph g);

    const Graph& graph() const { return g_; }
    int count() const { return count_; }       // |V| + 4|E|
    int coord_dim() const { return g_.vertex_count() + g_.edge_count(); }

    int z_vertex(int v) const { return v - 1; }
    int z_edge(int e) const { return g_.vertex_count() + e; }
    int y_fwd(int e) const { return g_.vertex_count() + g_.edge_count() + 2 * e; }
    int y_bwd(int e) const { return g_.vertex_count() + g_.edge_count() + 2 * e + 1; }
    int t_edge(int e) const { return g_.vertex_count() + 3 * g_.edge_count() + e; }
    // y variable for the directed edge (i,j); the undirected edge must exist.
    int y_directed(int i, int j) const;

    GenTag tag(int id) const;
    int vertex_of(int id) const;               // ZVertex only
    int edge_of(int id) const;                 // ZEdge / Y / T
    std::pair<int, int> y_endpoints(int id) const;  // ordered (i,j) with i -> j

    // Lattice point of the generator; equals its exponent image under the
    // monomial map (z_k -> unit, y_ije -> +i -j +e, t_e -> +i +j -e).
    const IntVec& point(int id) const { return points_[(size_t)id]; }

    std::string name(int id) const;

    // Rank used to pick the stored plus-monomial of a binomial: all forward
    // y (by edge), all backward y (by edge), t, z-edge, z-vertex.
    int sign_rank(int id) const { return sign_rank_[(size_t)id]; }

private:
    Graph g_;
    int count_;
    std::vector<IntVec> points_;
    std::vector<int> sign_rank_;
};

IntVec exponent_image(const GeneratorTable& table, int gen_id);

int dimension(const Graph& g);  // |V| + |E| - 1

}  // namespace cosmo

#endif
