#pragma once
#include <vector>

#include "zonalg/groundset.hpp"
#include "zonalg/matroid.hpp"
#include "zonalg/spaces.hpp"

namespace zonalg {

// Exact rational points, kept distinct and sorted lexicographically.
using PointSet = std::vector<RatVec>;

// One slab per facet normal; the zonotope is the intersection of its slabs.
struct Slab {
    IntVec normal;
    Int lo, hi;  // lo = sum min(0, normal.x) <= 0 <= hi = sum max(0, normal.x)
};

struct ZonotopeH {
    std::size_t n = 0;
    std::vector<Slab> slabs;
};

ZonotopeH zonotope_h(const GroundSet& X);
bool zonotope_contains(const ZonotopeH& Z, const RatVec& p, bool open);

PointSet lattice_points(const GroundSet& X, bool open);
Rat volume(const GroundSet& X);

struct GenericPoint {
    RatVec t;
    unsigned attempts = 0;
};

// Certified off every lattice translate of every facet hyperplane.
bool t_certificate(const GroundSet& X, const RatVec& t);
GenericPoint generic_t(const GroundSet& X, unsigned seed = 0, unsigned max_attempts = 32);

// Lattice translates of the zonotope covering t: {a integer : t - a in Z(X)}.
PointSet zxt(const GroundSet& X, const RatVec& t);

// Generic arrangement: hyperplane x.v = lambda_x per column, one vertex per
// basis, certified so that no vertex meets any further hyperplane.
struct ArrangementData {
    GroundSet ground;
    RatVec lambda;
    unsigned attempts = 0;
    std::vector<Subset> basis_list;
    std::vector<RatVec> vertices;  // aligned with basis_list
};

bool lambda_certificate(const GroundSet& X, const RatVec& lambda);
ArrangementData generic_lambda(const GroundSet& X, unsigned seed = 0, unsigned max_attempts = 32);

PointSet all_vertices(const ArrangementData& A);
// Needs an arrangement over the extended configuration.
PointSet external_vertices(const ArrangementData& A, const GroundSet& X, const ExternalFrame& f);
// Needs an arrangement over X itself.
PointSet internal_vertices(const ArrangementData& A, const GroundSet& X);

// Least map: rows are truncated exponentials at the points, the space is
// spanned by the least homogeneous terms of the reduced rows.
GradedPolySpace least_space(const PointSet& sigma, std::size_t n, int degcap);

// Evaluation matrix of a basis of P at sigma is nonsingular.
bool correctness_check(const GradedPolySpace& P, const PointSet& sigma);

}  // namespace zonalg
