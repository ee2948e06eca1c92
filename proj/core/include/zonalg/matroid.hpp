#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "zonalg/groundset.hpp"

namespace zonalg {

// Column index subset, always sorted ascending.
using Subset = std::vector<int>;

constexpr std::size_t kEnumerationCap = 22;

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const Subset&)>& fn);
void for_each_subset(std::size_t n, const std::function<void(const Subset&)>& fn,
                     std::size_t cap = kEnumerationCap);

bool is_independent(const GroundSet& X, const Subset& S);
bool in_span(const GroundSet& X, const Subset& S, std::size_t col);

std::vector<Subset> bases(const GroundSet& X);
std::vector<Subset> independents(const GroundSet& X);
bool is_unimodular(const GroundSet& X);

struct EhrhartPoly {
    std::vector<long long> coeff;  // coeff[k] = number of independent k-subsets
    Int eval(long long t) const;
};
EhrhartPoly ehrhart(const GroundSet& X);

// Greedy completion of an independent subset of X by frame columns, scanned
// in frame order. Returns a basis of the extended configuration.
Subset extend(const GroundSet& X, const ExternalFrame& f, const Subset& indep);

struct ExternalBasisRecord {
    Subset indep;  // subset of X indices
    Subset basis;  // subset of extended-configuration indices
};
std::vector<ExternalBasisRecord> external_basis_records(const GroundSet& X,
                                                        const ExternalFrame& f);
std::vector<Subset> external_bases(const GroundSet& X, const ExternalFrame& f);

bool internally_active(const GroundSet& X, const Subset& B, int b);
std::size_t val_star(const GroundSet& X, const Subset& B);
std::vector<Subset> internal_bases(const GroundSet& X);

std::vector<FacetHyperplane> facet_hyperplanes(const GroundSet& X);

// X(I): columns outside the span of the order prefix of I.
Subset xset(const GroundSet& X, const Subset& I);
std::size_t val(const GroundSet& X, const Subset& I);

// Long subsets meet every basis of the matching family; short complements span.
bool is_long(const GroundSet& X, const Subset& Y);
bool is_short(const GroundSet& X, const Subset& Y);
bool is_very_short(const GroundSet& X, const Subset& Y);
bool hits_all(const Subset& Y, const std::vector<Subset>& family);

std::vector<Subset> minimal_hitting_sets(std::size_t ground, const std::vector<Subset>& family,
                                         std::size_t cap = kEnumerationCap);
std::vector<Subset> minimal_long_central(const GroundSet& X);
std::vector<Subset> minimal_long_external(const GroundSet& X, const ExternalFrame& f,
                                          std::size_t cap = kEnumerationCap);
std::vector<Subset> minimal_long_internal(const GroundSet& X, std::size_t cap = kEnumerationCap);
std::vector<Subset> very_short_sets(const GroundSet& X, std::size_t cap = kEnumerationCap);

Subset complement(std::size_t n, const Subset& S);
Subset set_union(const Subset& a, const Subset& b);
Subset set_minus(const Subset& a, const Subset& b);

}  // namespace zonalg
