#include "zonalg/ideals.hpp"

#include <algorithm>

#include "zonalg/errors.hpp"
#include "zonalg/matrix.hpp"
#include "zonalg/spaces.hpp"

namespace zonalg {

IdealGens igens(const GroundSet& X, int eps) {
    IdealGens out;
    out.n = X.dim();
    out.kind = eps < 0 ? IdealKind::IMinus : (eps > 0 ? IdealKind::IPlus : IdealKind::ICentral);
    for (const auto& h : facet_hyperplanes(X)) {
        int e = static_cast<int>(h.mult) + eps;
        out.gens.push_back(MPoly::linear_form(h.normal).pow(static_cast<unsigned>(e)));
    }
    return out;
}

namespace {

IdealGens from_long_family(const GroundSet& ground, IdealKind kind,
                           const std::vector<Subset>& family) {
    IdealGens out;
    out.n = ground.dim();
    out.kind = kind;
    for (const auto& Y : family) {
        out.gens.push_back(p_of(ground, Y));
        out.long_sets.push_back(Y);
    }
    return out;
}

}  // namespace

IdealGens jgens_central(const GroundSet& X) {
    return from_long_family(X, IdealKind::JCentral, minimal_long_central(X));
}

IdealGens jgens_external(const GroundSet& X, const ExternalFrame& f, std::size_t cap) {
    GroundSet Xp = extended(X, f);
    return from_long_family(Xp, IdealKind::JPlus, minimal_long_external(X, f, cap));
}

IdealGens jgens_internal(const GroundSet& X, std::size_t cap) {
    return from_long_family(X, IdealKind::JMinus, minimal_long_internal(X, cap));
}

IdealGens jgens_family(const GroundSet& ground, const std::vector<Subset>& family,
                       std::size_t cap) {
    auto hitting = minimal_hitting_sets(ground.size(), family, cap);
    return from_long_family(ground, IdealKind::JFamily, hitting);
}

namespace {

// Functional rows for degree j: p |-> sum_b beta! (m g)_b p_b over multipliers m.
std::vector<RatVec> constraint_rows(const IdealGens& g, int j,
                                    const std::vector<Expo>& monos) {
    std::vector<RatVec> rows;
    for (const auto& gen : g.gens) {
        int dg = gen.degree();
        if (dg < 0 || dg > j) continue;
        for (const auto& m : monomials_of_degree(g.n, j - dg)) {
            MPoly prod = gen * MPoly::monomial(g.n, m);
            RatVec row(monos.size(), Rat(0));
            for (std::size_t c = 0; c < monos.size(); ++c) {
                Rat cf = prod.coeff(monos[c]);
                if (!cf.is_zero()) row[c] = cf * multi_factorial(monos[c]);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace

GradedPolySpace kernel(const IdealGens& g, int degcap) {
    std::vector<MPoly> all;
    for (int j = 0; j <= degcap; ++j) {
        auto monos = monomials_of_degree(g.n, j);
        auto rows = constraint_rows(g, j, monos);
        if (rows.empty()) {
            for (const auto& m : monos) all.push_back(MPoly::monomial(g.n, m));
            continue;
        }
        RatMatrix M = RatMatrix::from_rows(rows);
        for (const auto& v : M.nullspace())
            all.push_back(from_coeff_row(g.n, monos, v));
    }
    GradedPolySpace s = make_graded(g.n, all);
    if (static_cast<int>(s.comp.size()) < degcap + 1) s.comp.resize(degcap + 1);
    return s;
}

GradedPolySpace ideal_slices(const IdealGens& g, int degcap) {
    std::vector<MPoly> all;
    for (int j = 0; j <= degcap; ++j) {
        for (const auto& gen : g.gens) {
            int dg = gen.degree();
            if (dg < 0 || dg > j) continue;
            for (const auto& m : monomials_of_degree(g.n, j - dg))
                all.push_back(gen * MPoly::monomial(g.n, m));
        }
    }
    GradedPolySpace s = make_graded(g.n, all);
    if (static_cast<int>(s.comp.size()) < degcap + 1) s.comp.resize(degcap + 1);
    return s;
}

bool ideal_membership(const IdealGens& g, const MPoly& f) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw DimensionMismatch("ideal_membership needs a homogeneous input");
    int d = f.degree();
    auto monos = monomials_of_degree(g.n, d);
    std::vector<RatVec> rows;
    for (const auto& gen : g.gens) {
        int dg = gen.degree();
        if (dg < 0 || dg > d) continue;
        for (const auto& m : monomials_of_degree(g.n, d - dg))
            rows.push_back(coeff_row(gen * MPoly::monomial(g.n, m), monos));
    }
    if (rows.empty()) return false;
    RatMatrix M = RatMatrix::from_rows(rows);
    std::size_t base = M.rank();
    rows.push_back(coeff_row(f, monos));
    return RatMatrix::from_rows(rows).rank() == base;
}

}  // namespace zonalg
