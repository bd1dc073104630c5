#ifndef COSMOTOPE_CANONICAL_FORM_HPP
#define COSMOTOPE_CANONICAL_FORM_HPP

// Exact evaluation of the canonical rational function as a sum over the
// facets of a triangulation, with cross-order agreement as the oracle.

#include <string>
#include <vector>

#include "cosmotope/triangulation.hpp"

namespace cosmo {

// Evaluation hit a wall: some barycentric coordinate vanished.
struct PoleError : std::runtime_error {
    std::vector<int> facet_indices;
    explicit PoleError(std::vector<int> facets)
        : std::runtime_error("point lies on a simplex wall"), facet_indices(std::move(facets)) {}
};

// A simplex with its cached inverse vertex matrix and normalized volume.
struct SimplexForm {
    GenSet facet;       // empty for ad-hoc simplices
    QMat points;        // rows, on the hyperplane sum = 1
    QMat inverse;
    BigInt volume;      // |det|, 1 for unimodular facets
};

SimplexForm make_simplex_form(const std::vector<IntVec>& points);
SimplexForm facet_simplex_form(const GenSet& f, const GeneratorTable& table);

// Unique lambda with lambda . points = p; sums to 1 on the hyperplane.
QVec barycentric(const SimplexForm& s, const QVec& p);

// 1 / (volume * prod(lambda_i)); PoleError when some lambda vanishes.
Rational simplex_canonical_value(const SimplexForm& s, const QVec& p);

// Per-triangulation evaluator with the facet inverses precomputed.
class PolytopeForm {
public:
    PolytopeForm(const Triangulation& t, const GeneratorTable& table);
    // Sum over all facets; facets with negative coordinates contribute too.
    Rational value(const QVec& p) const;
    const std::vector<SimplexForm>& simplices() const { return forms_; }

private:
    std::vector<SimplexForm> forms_;
};

Rational polytope_canonical_value(const Triangulation& t, const GeneratorTable& table,
                                  const QVec& p);

// Deterministic strictly interior rational points: positive seeded weights
// over all generator points.
std::vector<QVec> sample_points(const GeneratorTable& table, int count, uint64_t seed);

struct IndependenceReport {
    bool pass = true;
    struct Disagreement {
        int point_index;
        std::string order_a, order_b;
        Rational value_a, value_b;
    };
    std::vector<Disagreement> disagreements;
};

// Exact agreement of the canonical value across the triangulations of all
// given good orders at every point.
IndependenceReport independence_check(const GeneratorTable& table,
                                      const std::vector<TermOrder>& orders,
                                      const std::vector<QVec>& points);

}  // namespace cosmo

#endif
