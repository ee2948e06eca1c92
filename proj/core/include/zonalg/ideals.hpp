#pragma once
#include <vector>

#include "zonalg/groundset.hpp"
#include "zonalg/matroid.hpp"
#include "zonalg/mpoly.hpp"

namespace zonalg {

enum class IdealKind { IMinus, ICentral, IPlus, JMinus, JCentral, JPlus, JFamily };

// Homogeneous generating set. I-kind generators are powers of facet normals,
// J-kind generators are products p_Y over an inclusion-minimal long family.
struct IdealGens {
    std::size_t n = 0;
    IdealKind kind = IdealKind::ICentral;
    std::vector<MPoly> gens;
    std::vector<Subset> long_sets;  // J kinds only, aligned with gens
};

// eps -1|0|+1 selects exponent m(H)+eps. An exponent of zero yields the
// constant generator 1: the ideal is all of Pi and its kernel is {0}.
IdealGens igens(const GroundSet& X, int eps);

IdealGens jgens_central(const GroundSet& X);
IdealGens jgens_external(const GroundSet& X, const ExternalFrame& f,
                         std::size_t cap = kEnumerationCap);
IdealGens jgens_internal(const GroundSet& X, std::size_t cap = kEnumerationCap);
// Arbitrary basis family over `ground`: generators hit every member.
IdealGens jgens_family(const GroundSet& ground, const std::vector<Subset>& family,
                       std::size_t cap = kEnumerationCap);

// Per-degree kernel {p : g(D)p = 0 for all generators} for degrees 0..degcap.
// Row space per degree j: coefficients of the functionals p -> ((m g)(D)p)(0)
// over monomial multipliers m of degree j - deg g.
struct GradedPolySpace;
GradedPolySpace kernel(const IdealGens& g, int degcap);

// Degree-j slices of the ideal itself, spanned by the multiples m*g.
GradedPolySpace ideal_slices(const IdealGens& g, int degcap);

// f homogeneous: membership in the degree-(deg f) slice.
bool ideal_membership(const IdealGens& g, const MPoly& f);

}  // namespace zonalg
