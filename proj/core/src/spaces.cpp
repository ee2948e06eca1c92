#include "zonalg/spaces.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "zonalg/errors.hpp"

namespace zonalg {

namespace {

// Reduced echelon basis of a homogeneous degree-d span, rows in pivot order.
std::vector<MPoly> echelon_slice(std::size_t n, int d, const std::vector<MPoly>& polys) {
    std::vector<RatVec> rows;
    auto monos = monomials_of_degree(n, d);
    for (const auto& p : polys)
        if (!p.is_zero()) rows.push_back(coeff_row(p, monos));
    if (rows.empty()) return {};
    RatMatrix R = RatMatrix::from_rows(rows).rref();
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < R.rows(); ++i) {
        RatVec r = R.row(i);
        if (!is_zero_vec(r)) out.push_back(from_coeff_row(n, monos, r));
    }
    return out;
}

std::vector<RatVec> slice_rows(const std::vector<MPoly>& slice, const std::vector<Expo>& monos) {
    std::vector<RatVec> rows;
    rows.reserve(slice.size());
    for (const auto& p : slice) rows.push_back(coeff_row(p, monos));
    return rows;
}

const std::vector<MPoly>& slice_or_empty(const GradedPolySpace& s, std::size_t d) {
    static const std::vector<MPoly> empty;
    return d < s.comp.size() ? s.comp[d] : empty;
}

}  // namespace

std::vector<std::size_t> GradedPolySpace::hilbert() const {
    std::vector<std::size_t> h;
    for (const auto& c : comp) h.push_back(c.size());
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

std::size_t GradedPolySpace::dim() const {
    std::size_t d = 0;
    for (const auto& c : comp) d += c.size();
    return d;
}

int GradedPolySpace::top_degree() const {
    int t = -1;
    for (std::size_t j = 0; j < comp.size(); ++j)
        if (!comp[j].empty()) t = static_cast<int>(j);
    return t;
}

bool GradedPolySpace::contains(const MPoly& p) const {
    if (p.is_zero()) return true;
    for (int d = 0; d <= p.degree(); ++d) {
        MPoly part = p.homogeneous_component(d);
        if (part.is_zero()) continue;
        const auto& slice = slice_or_empty(*this, static_cast<std::size_t>(d));
        if (slice.empty()) return false;
        auto monos = monomials_of_degree(n, d);
        auto rows = slice_rows(slice, monos);
        std::size_t base = RatMatrix::from_rows(rows).rank();
        rows.push_back(coeff_row(part, monos));
        if (RatMatrix::from_rows(rows).rank() != base) return false;
    }
    return true;
}

std::vector<MPoly> GradedPolySpace::flat() const {
    std::vector<MPoly> out;
    for (const auto& c : comp) out.insert(out.end(), c.begin(), c.end());
    return out;
}

GradedPolySpace make_graded(std::size_t n, const std::vector<MPoly>& gens) {
    std::map<int, std::vector<MPoly>> by_deg;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw DimensionMismatch("make_graded needs homogeneous input");
        by_deg[g.degree()].push_back(g);
    }
    GradedPolySpace s;
    s.n = n;
    if (by_deg.empty()) return s;
    s.comp.resize(static_cast<std::size_t>(by_deg.rbegin()->first) + 1);
    for (const auto& [d, v] : by_deg) s.comp[d] = echelon_slice(n, d, v);
    return s;
}

bool same_space(const GradedPolySpace& a, const GradedPolySpace& b) {
    if (a.n != b.n) return false;
    GradedPolySpace ca = make_graded(a.n, a.flat());
    GradedPolySpace cb = make_graded(b.n, b.flat());
    std::size_t top = std::max(ca.comp.size(), cb.comp.size());
    for (std::size_t j = 0; j < top; ++j) {
        const auto& sa = slice_or_empty(ca, j);
        const auto& sb = slice_or_empty(cb, j);
        if (sa.size() != sb.size()) return false;
        for (std::size_t i = 0; i < sa.size(); ++i)
            if (!(sa[i] == sb[i])) return false;
    }
    return true;
}

bool subspace_of(const GradedPolySpace& a, const GradedPolySpace& b) {
    if (a.n != b.n) return false;
    for (std::size_t j = 0; j < a.comp.size(); ++j) {
        if (a.comp[j].empty()) continue;
        const auto& sb = slice_or_empty(b, j);
        if (sb.size() < a.comp[j].size()) return false;
        auto monos = monomials_of_degree(a.n, static_cast<int>(j));
        auto rows = slice_rows(sb, monos);
        std::size_t base = RatMatrix::from_rows(rows).rank();
        for (const auto& r : slice_rows(a.comp[j], monos)) rows.push_back(r);
        if (RatMatrix::from_rows(rows).rank() != base) return false;
    }
    return true;
}

GradedPolySpace intersect(const GradedPolySpace& a, const GradedPolySpace& b) {
    if (a.n != b.n) throw DimensionMismatch("intersect over different variable counts");
    GradedPolySpace out;
    out.n = a.n;
    std::size_t top = std::min(a.comp.size(), b.comp.size());
    out.comp.resize(top);
    for (std::size_t d = 0; d < top; ++d) {
        if (a.comp[d].empty() || b.comp[d].empty()) continue;
        auto monos = monomials_of_degree(a.n, static_cast<int>(d));
        auto annihilator = [&](const std::vector<MPoly>& slice) {
            return RatMatrix::from_rows(slice_rows(slice, monos)).nullspace();
        };
        std::vector<RatVec> stack = annihilator(a.comp[d]);
        for (auto& z : annihilator(b.comp[d])) stack.push_back(std::move(z));
        std::vector<MPoly> polys;
        if (stack.empty()) {
            for (const auto& m : monos) polys.push_back(MPoly::monomial(a.n, m));
        } else {
            for (const auto& v : RatMatrix::from_rows(stack).nullspace())
                polys.push_back(from_coeff_row(a.n, monos, v));
        }
        out.comp[d] = echelon_slice(a.n, static_cast<int>(d), polys);
    }
    return out;
}

int default_icap(const GroundSet& X, int eps) {
    int N = static_cast<int>(X.size()), n = static_cast<int>(X.dim());
    return eps > 0 ? N + 1 : N - n + 1;
}

int default_dcap(const GroundSet& X, SpaceKind k) {
    int N = static_cast<int>(X.size()), n = static_cast<int>(X.dim());
    return k == SpaceKind::External ? N + 1 : N - n + 1;
}

GradedPolySpace pspace(const GroundSet& X, SpaceKind k) {
    switch (k) {
        case SpaceKind::Central: {
            std::vector<MPoly> q;
            for (const auto& B : bases(X)) q.push_back(p_of(X, xset(X, B)));
            return make_graded(X.dim(), q);
        }
        case SpaceKind::External: {
            std::vector<MPoly> q;
            for (const auto& I : independents(X)) q.push_back(p_of(X, xset(X, I)));
            return make_graded(X.dim(), q);
        }
        case SpaceKind::Internal:
            return kernel(igens(X, -1), default_icap(X, -1));
    }
    throw Error("unknown space kind");
}

std::vector<std::size_t> hilbert(const GroundSet& X, SpaceKind k) {
    std::vector<Subset> fam;
    switch (k) {
        case SpaceKind::Central: fam = bases(X); break;
        case SpaceKind::External: fam = independents(X); break;
        case SpaceKind::Internal: fam = internal_bases(X); break;
    }
    std::vector<std::size_t> h;
    for (const auto& S : fam) {
        std::size_t v = val(X, S);
        if (h.size() <= v) h.resize(v + 1, 0);
        ++h[v];
    }
    return h;
}

GradedPolySpace pspace_plus_span(const GroundSet& X, std::size_t cap) {
    std::vector<MPoly> all;
    for_each_subset(X.size(), [&](const Subset& Y) { all.push_back(p_of(X, Y)); }, cap);
    return make_graded(X.dim(), all);
}

PinPex pin_pex(const GroundSet& X) {
    PinPex out;
    for (const auto& B : bases(X)) {
        MPoly q = p_of(X, xset(X, B));
        if (val_star(X, B) == X.dim()) {
            out.bases_in.push_back(B);
            out.q_in.push_back(q);
        } else {
            out.bases_ex.push_back(B);
            out.q_ex.push_back(q);
        }
    }
    out.in = make_graded(X.dim(), out.q_in);
    out.ex = make_graded(X.dim(), out.q_ex);
    out.in.n = X.dim();
    out.ex.n = X.dim();
    return out;
}

TildeQRecord tilde_q_record(const GroundSet& X, const Subset& B) {
    std::size_t n = X.dim(), N = X.size();
    if (B.size() != n || !is_independent(X, B) || val_star(X, B) != n)
        throw NotInternalBasis();
    Subset xb = xset(X, B);
    MPoly Q = p_of(X, xb);
    TildeQRecord rec{B, Q, Q, xb, {}};

    // Facet hyperplanes whose reduced power does not yet annihilate Q_B,
    // each with the unique off-hyperplane column outside X(B) and the
    // last off-hyperplane column overall.
    struct Hyp {
        IntVec normal;
        int x_h, w_h;
    };
    std::vector<Hyp> hh;
    for (const auto& h : facet_hyperplanes(X)) {
        MPoly gen = MPoly::linear_form(h.normal).pow(static_cast<unsigned>(h.mult - 1));
        if (diff_apply(gen, Q).is_zero()) continue;
        int xh = -1, wh = -1;
        for (std::size_t c = 0; c < N; ++c) {
            if (std::binary_search(h.on.begin(), h.on.end(), static_cast<int>(c))) continue;
            wh = static_cast<int>(c);
            if (!std::binary_search(xb.begin(), xb.end(), static_cast<int>(c))) {
                if (xh != -1) throw Error("correction chain: off-hyperplane complement not a singleton");
                xh = static_cast<int>(c);
            }
        }
        if (xh == -1) throw Error("correction chain: missing replacement column");
        hh.push_back({h.normal, xh, wh});
    }
    if (hh.empty()) return rec;

    // Group replacement columns by the shared off-hyperplane maximum.
    std::map<int, std::set<int>> groups;
    for (const auto& h : hh) groups[h.w_h].insert(h.x_h);

    Subset W;
    std::vector<RatVec> w_primes;
    std::set<int> cum;
    for (const auto& [w, xi] : groups) {
        W.push_back(w);
        for (int x : xi) cum.insert(x);
        std::vector<RatVec> normals;
        for (const auto& h : hh)
            if (cum.count(h.x_h)) normals.push_back(to_rat_vec(h.normal));
        auto sbasis = RatMatrix::from_rows(normals).nullspace();
        std::vector<RatVec> cols(sbasis);
        for (int x : xi) cols.push_back(to_rat_vec(X.col(x)));
        auto sol = RatMatrix::from_columns(cols).solve(to_rat_vec(X.col(w)));
        if (!sol) throw Error("correction chain: split representation failed");
        RatVec wp(n, Rat(0));
        for (std::size_t k = 0; k < sbasis.size(); ++k)
            wp = add(wp, scale(sbasis[k], (*sol)[k]));
        w_primes.push_back(std::move(wp));
    }

    Subset Z = set_minus(xb, W);
    if (Z.size() + W.size() != xb.size())
        throw Error("correction chain: maxima escape the valuation set");
    MPoly tq = p_of(X, Z);
    for (const auto& wp : w_primes) tq = tq * MPoly::linear_form(wp);
    rec.tq = tq;
    rec.y_part = Z;
    rec.w_primes = w_primes;
    return rec;
}

MPoly tilde_q(const GroundSet& X, const Subset& B) { return tilde_q_record(X, B).tq; }

std::vector<TildeQRecord> tilde_q_basis(const GroundSet& X) {
    std::vector<TildeQRecord> out;
    for (const auto& B : internal_bases(X)) out.push_back(tilde_q_record(X, B));
    return out;
}

DirectSumReport direct_sum_check(const GradedPolySpace& P, const IdealGens& J) {
    DirectSumReport rep;
    std::size_t n = J.n;
    int top = P.top_degree() + 1;
    rep.checked_to = top;
    GradedPolySpace slices = ideal_slices(J, top);
    for (int j = 0; j <= top; ++j) {
        const auto& ps = slice_or_empty(P, static_cast<std::size_t>(j));
        const auto& js = slice_or_empty(slices, static_cast<std::size_t>(j));
        auto monos = monomials_of_degree(n, j);
        rep.dim_p.push_back(ps.size());
        rep.dim_j.push_back(js.size());
        rep.dim_full.push_back(monos.size());
        if (ps.size() + js.size() != monos.size()) {
            rep.failure = "dimension sum off at degree " + std::to_string(j);
            return rep;
        }
        if (!ps.empty() && !js.empty()) {
            auto rows = slice_rows(ps, monos);
            for (const auto& r : slice_rows(js, monos)) rows.push_back(r);
            if (RatMatrix::from_rows(rows).rank() != ps.size() + js.size()) {
                rep.failure = "overlap at degree " + std::to_string(j);
                return rep;
            }
        }
    }
    // Top slice is pure ideal; fullness propagates to every higher degree.
    rep.ok = true;
    return rep;
}

DualityReport duality_gram(const GradedPolySpace& P, const GradedPolySpace& D) {
    if (P.dim() != D.dim()) throw DimensionMismatch("duality_gram needs equal dimensions");
    DualityReport rep;
    auto pf = P.flat();
    auto df = D.flat();
    rep.gram = RatMatrix(pf.size(), df.size());
    for (std::size_t i = 0; i < pf.size(); ++i)
        for (std::size_t j = 0; j < df.size(); ++j)
            rep.gram.at(i, j) = pairing(pf[i], df[j]);
    bool ok = true;
    std::size_t top = std::max(P.comp.size(), D.comp.size());
    for (std::size_t d = 0; d < top; ++d) {
        const auto& ps = slice_or_empty(P, d);
        const auto& ds = slice_or_empty(D, d);
        if (ps.size() != ds.size()) {
            rep.degree_dets.push_back(Rat(0));
            ok = false;
            continue;
        }
        if (ps.empty()) {
            rep.degree_dets.push_back(Rat(1));
            continue;
        }
        RatMatrix G(ps.size(), ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ds.size(); ++j)
                G.at(i, j) = pairing(ps[i], ds[j]);
        Rat dt = G.det();
        if (dt.is_zero()) ok = false;
        rep.degree_dets.push_back(std::move(dt));
    }
    rep.ok = ok;
    return rep;
}

GradedPolySpace dspace(const GroundSet& ground, const std::vector<Subset>& family, int degcap,
                       std::size_t cap) {
    return kernel(jgens_family(ground, family, cap), degcap);
}

GradedPolySpace very_short_span(const GroundSet& X, std::size_t cap) {
    std::vector<MPoly> polys;
    for (const auto& Y : very_short_sets(X, cap)) polys.push_back(p_of(X, Y));
    GradedPolySpace s = make_graded(X.dim(), polys);
    s.n = X.dim();
    return s;
}

Conj61Report conjecture61_report(const GroundSet& X) {
    Conj61Report rep;
    GradedPolySpace vs = very_short_span(X);
    GradedPolySpace pm = pspace(X, SpaceKind::Internal);
    rep.h_span = vs.hilbert();
    rep.h_internal = pm.hilbert();
    rep.containment = subspace_of(vs, pm);
    rep.equal = rep.containment && same_space(vs, pm);
    return rep;
}

GradedPolySpace intersection_plus_space(const GroundSet& X) {
    GradedPolySpace acc;
    bool first = true;
    for (const auto& B : bases(X)) {
        std::vector<IntVec> extra;
        for (int i : B) extra.push_back(X.col(i));
        GroundSet XB = X.appended(extra);
        GradedPolySpace PB = kernel(igens(XB, 0), default_icap(XB, 0));
        if (first) {
            acc = std::move(PB);
            first = false;
        } else {
            acc = intersect(acc, PB);
        }
    }
    return acc;
}

bool intersection_char_plus(const GroundSet& X) {
    return same_space(intersection_plus_space(X), pspace(X, SpaceKind::External));
}

JSplitReport jminus_split_check(const GroundSet& X) {
    JSplitReport rep;
    int capdeg = default_icap(X, 0);
    GradedPolySpace jm = ideal_slices(jgens_internal(X), capdeg);
    GradedPolySpace jc = ideal_slices(jgens_central(X), capdeg);
    GradedPolySpace pe = pin_pex(X).ex;
    bool ok = true;
    for (int j = 0; j <= capdeg; ++j) {
        auto monos = monomials_of_degree(X.dim(), j);
        const auto& sm = slice_or_empty(jm, static_cast<std::size_t>(j));
        const auto& sc = slice_or_empty(jc, static_cast<std::size_t>(j));
        const auto& se = slice_or_empty(pe, static_cast<std::size_t>(j));
        rep.dim_jminus.push_back(sm.size());
        rep.dim_jcentral.push_back(sc.size());
        rep.dim_pex.push_back(se.size());
        auto rows = slice_rows(sc, monos);
        for (const auto& r : slice_rows(se, monos)) rows.push_back(r);
        std::size_t direct = rows.empty() ? 0 : RatMatrix::from_rows(rows).rank();
        rep.dim_sum.push_back(direct);
        if (direct != sc.size() + se.size() || direct != sm.size()) {
            ok = false;
            continue;
        }
        for (const auto& r : slice_rows(sm, monos)) rows.push_back(r);
        if (!rows.empty() && RatMatrix::from_rows(rows).rank() != direct) ok = false;
    }
    rep.ok = ok;
    return rep;
}

}  // namespace zonalg
