#ifndef COSMOTOPE_POLYTOPE_HPP
#define COSMOTOPE_POLYTOPE_HPP

// Exact polyhedral side: inequality description, membership, lattice point
// counts of dilates, h* vectors and an independent normalized-volume oracle
// via a placing triangulation.

#include <vector>

#include "cosmotope/generators.hpp"
#include "cosmotope/linalg.hpp"
#include "cosmotope/rational.hpp"

namespace cosmo {

// Inequalities a.x <= c cutting the polytope out of the hyperplane
// sum(x) = 1. Normals are primitive integer vectors.
struct HalfspaceDescription {
    int coord_dim = 0;
    std::vector<std::pair<IntVec, long long>> inequalities;
};

// Irredundant facet description; guarded to dimension <= 8.
HalfspaceDescription halfspaces(const GeneratorTable& table);

// Membership of a rational point (checks sum = 1 and every inequality).
bool contains(const HalfspaceDescription& h, const QVec& p);

// Lattice points of the k-th dilate by exhaustive scan over [-k,k]^m
// intersected with sum = k. Guarded: dimension <= 6, k <= dimension+1.
long long count_dilate_points(const GeneratorTable& table, int k);

struct HStarVector {
    std::vector<BigInt> coefficients;  // h*_0 .. h*_d
    BigInt sum() const {
        BigInt s(0);
        for (const auto& c : coefficients) s += c;
        return s;
    }
};

// Coefficients (constant first) of the degree-d polynomial interpolating
// counts[k] at k = 0..d.
QVec ehrhart_polynomial(const std::vector<long long>& counts);
Rational evaluate_polynomial(const QVec& coeffs, long long x);

// h* from dilate counts at k = 0..d via the binomial basis change.
// Guarded like count_dilate_points.
HStarVector hstar_ehrhart(const GeneratorTable& table);

// Normalized volume by a placing triangulation of the generator points in
// canonical order, summing |det| over the simplices. Guard: dimension <= 7.
BigInt brute_volume(const GeneratorTable& table);

// Primitive integer hyperplane through the given points within sum = 1;
// nullopt when the points do not span one. Shared by the hull routines.
std::optional<std::pair<IntVec, long long>> hyperplane_through(
    const std::vector<IntVec>& points);

}  // namespace cosmo

#endif
