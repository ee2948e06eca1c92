#pragma once
#include <string>
#include <vector>

#include "zonalg/ideals.hpp"

namespace zonalg {

enum class SpaceKind { Internal, Central, External };

// Graded subspace of Pi with a canonical reduced echelon basis per degree.
struct GradedPolySpace {
    std::size_t n = 0;
    std::vector<std::vector<MPoly>> comp;

    std::vector<std::size_t> hilbert() const;  // per-degree dims, trailing zeros trimmed
    std::size_t dim() const;
    int top_degree() const;  // -1 for the zero space
    bool contains(const MPoly& p) const;
    std::vector<MPoly> flat() const;  // bases concatenated by degree
};

// Canonicalize a span of homogeneous polynomials into echelon slices.
GradedPolySpace make_graded(std::size_t n, const std::vector<MPoly>& gens);
bool same_space(const GradedPolySpace& a, const GradedPolySpace& b);
bool subspace_of(const GradedPolySpace& a, const GradedPolySpace& b);
GradedPolySpace intersect(const GradedPolySpace& a, const GradedPolySpace& b);

int default_icap(const GroundSet& X, int eps);
int default_dcap(const GroundSet& X, SpaceKind k);

// Central and external spaces come with their explicit valuation bases
// Q_B = p_{X(B)} and Q_I = p_{X(I)}; the internal space is the kernel of
// igens(X,-1), echelonized (see tilde_q_basis for the constructive basis).
GradedPolySpace pspace(const GroundSet& X, SpaceKind k);

// Hilbert series by valuation counting alone.
std::vector<std::size_t> hilbert(const GroundSet& X, SpaceKind k);

GradedPolySpace pspace_plus_span(const GroundSet& X, std::size_t cap = kEnumerationCap);

struct PinPex {
    GradedPolySpace in, ex;
    std::vector<MPoly> q_in, q_ex;
    std::vector<Subset> bases_in, bases_ex;
};
PinPex pin_pex(const GroundSet& X);

struct TildeQRecord {
    Subset basis;
    MPoly q;                      // Q_B
    MPoly tq;                     // corrected representative in ker I-
    Subset y_part;                // column indices, tq = p_{y_part} * prod of primed forms
    std::vector<RatVec> w_primes; // at most n-2 of them
};
MPoly tilde_q(const GroundSet& X, const Subset& B);
TildeQRecord tilde_q_record(const GroundSet& X, const Subset& B);
std::vector<TildeQRecord> tilde_q_basis(const GroundSet& X);

struct DirectSumReport {
    bool ok = false;
    int checked_to = -1;
    std::vector<std::size_t> dim_p, dim_j, dim_full;  // per degree 0..checked_to
    std::string failure;
};
DirectSumReport direct_sum_check(const GradedPolySpace& P, const IdealGens& J);

struct DualityReport {
    bool ok = false;
    RatMatrix gram;              // full bases ordered by degree
    std::vector<Rat> degree_dets;  // square blocks only; zero marks a mismatch
};
DualityReport duality_gram(const GradedPolySpace& P, const GradedPolySpace& D);

GradedPolySpace dspace(const GroundSet& ground, const std::vector<Subset>& family, int degcap,
                       std::size_t cap = kEnumerationCap);

GradedPolySpace very_short_span(const GroundSet& X, std::size_t cap = kEnumerationCap);

struct Conj61Report {
    bool containment = false;
    bool equal = false;
    std::vector<std::size_t> h_span, h_internal;
};
Conj61Report conjecture61_report(const GroundSet& X);

GradedPolySpace intersection_plus_space(const GroundSet& X);
bool intersection_char_plus(const GroundSet& X);

// J-(X) = J(X) (+) P_ex(X) degree by degree.
struct JSplitReport {
    bool ok = false;
    std::vector<std::size_t> dim_jminus, dim_jcentral, dim_pex, dim_sum;
};
JSplitReport jminus_split_check(const GroundSet& X);

}  // namespace zonalg
