#ifndef COSMOTOPE_TRIANGULATION_HPP
#define COSMOTOPE_TRIANGULATION_HPP

// Facet enumeration of the regular unimodular triangulation induced by a
// good term order, structural validation, and the h-vector.

#include <string>
#include <vector>

#include "cosmotope/polytope.hpp"
#include "cosmotope/toric.hpp"

namespace cosmo {

// A facet (or any face candidate) as a sorted list of generator ids.
using GenSet = std::vector<int>;

struct Triangulation {
    std::vector<GenSet> facets;       // canonical (lexicographic) order
    std::string order_descriptor;
    std::vector<GenSet> nonfaces;     // minimal non-faces used
};

// All (|V|+|E|)-subsets of the generators avoiding every minimal non-face.
// Guards: good order, |V|+4|E| <= 32.
Triangulation enumerate_facets(const GeneratorTable& table, const TermOrder& o);

// Exact determinant test: the facet's point matrix has det +-1.
bool is_unimodular_simplex(const GenSet& f, const GeneratorTable& table);

BigInt normalized_volume(const Triangulation& t);

struct TriangulationReport {
    bool pass = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        pass = false;
        failures.push_back(std::move(msg));
    }
};

// (a) unimodularity, (b) facet count vs the volume oracle, (c) support
// graph equals the host graph, (d) single/double edge shape, (e) interval
// double-edge counts on canonical paths, (f) seeded covering spot-check.
TriangulationReport validate_triangulation(const Triangulation& t, const GeneratorTable& table,
                                           uint64_t seed = 1);

// h-vector of the simplicial complex spanned by the facets; equals h* for
// these unimodular triangulations.
HStarVector hstar_from_triangulation(const Triangulation& t);

std::string facet_to_string(const GenSet& f, const GeneratorTable& table);

}  // namespace cosmo

#endif
