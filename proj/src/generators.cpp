#include "cosmotope/generators.hpp"

namespace cosmo {

GeneratorTable::GeneratorTable(Graph g) : g_(std::move(g)) {
    if (g_.edge_count() < 1)
        throw ValidationError("the polytope needs a graph with at least one edge");
    int V = g_.vertex_count(), E = g_.edge_count();
    count_ = V + 4 * E;
    points_.assign((size_t)count_, IntVec((size_t)(V + E), 0));
    for (int v = 1; v <= V; ++v)
        points_[(size_t)z_vertex(v)][(size_t)(v - 1)] = 1;
    for (int e = 0; e < E; ++e) {
        auto [i, j] = g_.edges()[(size_t)e];
        points_[(size_t)z_edge(e)][(size_t)(V + e)] = 1;
        auto& yf = points_[(size_t)y_fwd(e)];
        yf[(size_t)(i - 1)] = 1; yf[(size_t)(j - 1)] = -1; yf[(size_t)(V + e)] = 1;
        auto& yb = points_[(size_t)y_bwd(e)];
        yb[(size_t)(i - 1)] = -1; yb[(size_t)(j - 1)] = 1; yb[(size_t)(V + e)] = 1;
        auto& t = points_[(size_t)t_edge(e)];
        t[(size_t)(i - 1)] = 1; t[(size_t)(j - 1)] = 1; t[(size_t)(V + e)] = -1;
    }
    sign_rank_.assign((size_t)count_, 0);
    int r = 0;
    for (int e = 0; e < E; ++e) sign_rank_[(size_t)y_fwd(e)] = r++;
    for (int e = 0; e < E; ++e) sign_rank_[(size_t)y_bwd(e)] = r++;
    for (int e = 0; e < E; ++e) sign_rank_[(size_t)t_edge(e)] = r++;
    for (int e = 0; e < E; ++e) sign_rank_[(size_t)z_edge(e)] = r++;
    for (int v = 1; v <= V; ++v) sign_rank_[(size_t)z_vertex(v)] = r++;
}

int GeneratorTable::y_directed(int i, int j) const {
    int e = g_.edge_index(i, j);
    if (e < 0) throw ValidationError("y variable for a non-edge");
    return i < j ? y_fwd(e) : y_bwd(e);
}

GenTag GeneratorTable::tag(int id) const {
    int V = g_.vertex_count(), E = g_.edge_count();
    if (id < V) return GenTag::ZVertex;
    if (id < V + E) return GenTag::ZEdge;
    if (id < V + 3 * E) return GenTag::Y;
    return GenTag::T;
}

int GeneratorTable::vertex_of(int id) const { return id + 1; }

int GeneratorTable::edge_of(int id) const {
    int V = g_.vertex_count(), E = g_.edge_count();
    switch (tag(id)) {
        case GenTag::ZEdge: return id - V;
        case GenTag::Y: return (id - V - E) / 2;
        case GenTag::T: return id - V - 3 * E;
        default: throw ValidationError("generator has no edge");
    }
}

std::pair<int, int> GeneratorTable::y_endpoints(int id) const {
    int e = edge_of(id);
    auto [i, j] = g_.edges()[(size_t)e];
    bool fwd = id == y_fwd(e);
    return fwd ? std::pair<int, int>{i, j} : std::pair<int, int>{j, i};
}

std::string GeneratorTable::name(int id) const {
    auto edge_str = [&](int e) {
        auto [i, j] = g_.edges()[(size_t)e];
        return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    };
    switch (tag(id)) {
        case GenTag::ZVertex: return "z" + std::to_string(vertex_of(id));
        case GenTag::ZEdge: return "z" + edge_str(edge_of(id));
        case GenTag::T: return "t" + edge_str(edge_of(id));
        case GenTag::Y: {
            auto [i, j] = y_endpoints(id);
            return "y[" + std::to_string(i) + "," + std::to_string(j) + "]";
        }
    }
    return "?";
}

IntVec exponent_image(const GeneratorTable& table, int gen_id) {
    return table.point(gen_id);
}

int dimension(const Graph& g) { return g.vertex_count() + g.edge_count() - 1; }

}  // namespace cosmo
