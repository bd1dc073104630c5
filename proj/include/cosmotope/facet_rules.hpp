#ifndef COSMOTOPE_FACET_RULES_HPP
#define COSMOTOPE_FACET_RULES_HPP

// Graphical facet machinery: decorated graphs, the direct facet generators
// for paths and cycles, closed-form volumes, and the tree characterization
// (components at z-vertices, threshold paths, blocking, branchings).

#include <optional>
#include <string>
#include <vector>

#include "cosmotope/triangulation.hpp"

namespace cosmo {

// Node marks and per-edge symbol sets; bijective with a generator set.
struct DecoratedGraph {
    struct EdgeSymbols {
        bool z = false, t = false, yf = false, yb = false;
        int total() const { return (int)z + (int)t + (int)yf + (int)yb; }
    };
    std::vector<bool> zmark;          // index v, 1-based; true = z_v present
    std::vector<EdgeSymbols> edges;   // by host edge index

    // arrow queries relative to a direction (from, to) of a host edge
    bool has_arrow(const Graph& g, int from, int to) const;
    bool has_z(const Graph& g, int a, int b) const;
    bool has_t(const Graph& g, int a, int b) const;
};

DecoratedGraph decorate(const GenSet& s, const GeneratorTable& table);
GenSet extract(const DecoratedGraph& d, const GeneratorTable& table);
// Node marks then per-edge tokens in the fixed order  - ~ > <
std::string decorated_to_string(const DecoratedGraph& d, const Graph& g);

// Direct generation from the combinatorial facet description; the host of
// the table must be the canonical path (resp. cycle).
std::vector<GenSet> path_facets(const GeneratorTable& table);
std::vector<GenSet> cycle_facets(const GeneratorTable& table);

enum class VolumeKind { Path, Cycle };
BigInt closed_volume(VolumeKind kind, int n);  // 4^n resp. 4^n - 2^n

// Component of a decorated tree split at its z-vertices; z-vertices are
// shared between all incident components and are leaves of each.
struct ZComponent {
    std::vector<int> vertices;      // sorted
    std::vector<int> edge_ixs;      // host edge indices
    std::vector<int> z_members;     // vertices with a z mark
    std::vector<int> single_edges;  // edge indices carrying one symbol
    int local_root = 0;             // minimum under the tree order
    bool bounded = false;           // all leaves carry z marks
};

std::vector<ZComponent> z_components(const DecoratedGraph& d, const RootedTree& rt);

// The walk from a marked vertex through its first single edge down to the
// low point of the critically separated pair.
struct ThresholdPath {
    int endpoint = 0;               // i
    int far_endpoint = 0;           // the critically separated partner
    int alpha = 0;                  // minimum of the connecting path
    int type = 0;                   // 1: endpoint below partner, 2: above
    std::vector<int> vertices;      // endpoint ... alpha
    int single_pos = 0;             // index into the edge list of the walk
};

ThresholdPath threshold_path(const DecoratedGraph& d, const ZComponent& c, int i,
                             const RootedTree& rt);

bool is_blocking(const ThresholdPath& p, const DecoratedGraph& d, const RootedTree& rt);

// A cover with the forbidden orientation pattern: undirected between i and
// the path minimum, directed toward the minimum on the coverer's side.
bool has_partially_directed_branching(const DecoratedGraph& d, int i, const RootedTree& rt);

// Full tree facet test: connected support, edge shapes, per-component
// single-edge counts, blocking threshold paths, no branchings, and the
// root edge configuration.
bool tree_facet_check(const GenSet& s, const RootedTree& rt, const GeneratorTable& table);

// All facets of the tree triangulation by backtracking over per-edge
// symbols with component-wise pruning. Guard: at most 12 edges.
std::vector<GenSet> tree_facets(const RootedTree& rt, const GeneratorTable& table);

// Fundamental pairs plus the leading supports of simple zig-zag binomials
// of both types, interreduced; enough non-faces to enumerate tree facets.
std::vector<GenSet> simple_obstructions(const RootedTree& rt, const GeneratorTable& table);

// Subset search against an explicit non-face list (shared by the engine
// cross-checks); requires at most 64 generators.
std::vector<GenSet> facets_avoiding(const GeneratorTable& table,
                                    const std::vector<GenSet>& nonfaces);

}  // namespace cosmo

#endif
