#include "zonalg/matroid.hpp"

#include <algorithm>
#include <set>

#include "zonalg/errors.hpp"

namespace zonalg {

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const Subset&)>& fn) {
    if (k > n) return;
    if (k == 0) {
        fn(Subset{});
        return;
    }
    Subset idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != static_cast<int>(n - k + i)) break;
            if (i == 0) return;
        }
        if (idx[i] == static_cast<int>(n - k + i)) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void for_each_subset(std::size_t n, const std::function<void(const Subset&)>& fn,
                     std::size_t cap) {
    if (n > cap) throw GroundSetTooLarge(n, cap);
    for (std::size_t k = 0; k <= n; ++k) for_each_combination(n, k, fn);
}

bool is_independent(const GroundSet& X, const Subset& S) {
    if (S.size() > X.dim()) return false;
    return X.submatrix(S).rank() == S.size();
}

bool in_span(const GroundSet& X, const Subset& S, std::size_t col) {
    if (std::binary_search(S.begin(), S.end(), static_cast<int>(col))) return true;
    std::size_t r = X.submatrix(S).rank();
    Subset with = S;
    with.insert(std::lower_bound(with.begin(), with.end(), static_cast<int>(col)),
                static_cast<int>(col));
    return X.submatrix(with).rank() == r;
}

std::vector<Subset> bases(const GroundSet& X) {
    std::vector<Subset> out;
    for_each_combination(X.size(), X.dim(), [&](const Subset& S) {
        if (!X.submatrix(S).det().is_zero()) out.push_back(S);
    });
    return out;
}

std::vector<Subset> independents(const GroundSet& X) {
    std::vector<Subset> out;
    for (std::size_t k = 0; k <= X.dim(); ++k) {
        for_each_combination(X.size(), k, [&](const Subset& S) {
            if (is_independent(X, S)) out.push_back(S);
        });
    }
    return out;
}

bool is_unimodular(const GroundSet& X) {
    bool ok = true;
    for_each_combination(X.size(), X.dim(), [&](const Subset& S) {
        if (!ok) return;
        Rat d = X.submatrix(S).det().abs();
        if (!(d.is_zero() || d == Rat(1))) ok = false;
    });
    return ok;
}

Int EhrhartPoly::eval(long long t) const {
    Int acc = 0, p = 1;
    for (long long c : coeff) {
        acc += c * p;
        p *= t;
    }
    return acc;
}

EhrhartPoly ehrhart(const GroundSet& X) {
    EhrhartPoly e;
    e.coeff.assign(X.dim() + 1, 0);
    for (const Subset& I : independents(X)) ++e.coeff[I.size()];
    return e;
}

Subset extend(const GroundSet& X, const ExternalFrame& f, const Subset& indep) {
    if (!is_independent(X, indep)) throw DependentInput("extend of a dependent subset");
    GroundSet Xp = extended(X, f);
    Subset cur = indep;
    for (std::size_t j = X.size(); j < Xp.size(); ++j) {
        if (cur.size() == X.dim()) break;
        if (!in_span(Xp, cur, j)) cur.push_back(static_cast<int>(j));
    }
    if (cur.size() != X.dim()) throw RankDeficient("frame does not complete to a basis");
    return cur;
}

std::vector<ExternalBasisRecord> external_basis_records(const GroundSet& X,
                                                        const ExternalFrame& f) {
    std::vector<ExternalBasisRecord> out;
    for (const Subset& I : independents(X)) out.push_back({I, extend(X, f, I)});
    return out;
}

std::vector<Subset> external_bases(const GroundSet& X, const ExternalFrame& f) {
    std::vector<Subset> out;
    for (auto& rec : external_basis_records(X, f)) out.push_back(rec.basis);
    return out;
}

bool internally_active(const GroundSet& X, const Subset& B, int b) {
    if (!std::binary_search(B.begin(), B.end(), b)) throw BadIndex("element not in basis");
    Subset rest;
    for (int e : B)
        if (e != b) rest.push_back(e);
    int last_off = -1;
    for (std::size_t y = 0; y < X.size(); ++y)
        if (!in_span(X, rest, y)) last_off = static_cast<int>(y);
    return last_off == b;
}

std::size_t val_star(const GroundSet& X, const Subset& B) {
    std::size_t inactive = 0;
    for (int b : B)
        if (!internally_active(X, B, b)) ++inactive;
    return inactive;
}

std::vector<Subset> internal_bases(const GroundSet& X) {
    std::vector<Subset> out;
    for (const Subset& B : bases(X))
        if (val_star(X, B) == X.dim()) out.push_back(B);
    return out;
}

namespace {

IntVec primitive_normal(const RatVec& v) {
    Int l = 1;
    for (const Rat& x : v) l = boost::multiprecision::lcm(l, x.den());
    IntVec w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].num() * (l / v[i].den());
        g = boost::multiprecision::gcd(g, w[i]);
    }
    for (auto& x : w) x /= g;
    for (const Int& x : w) {
        if (x.is_zero()) continue;
        if (x < 0)
            for (auto& y : w) y = -y;
        break;
    }
    return w;
}

Int dot_int(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<FacetHyperplane> facet_hyperplanes(const GroundSet& X) {
    const std::size_t n = X.dim(), N = X.size();
    std::set<IntVec> seen;
    std::vector<FacetHyperplane> out;
    for_each_combination(N, n - 1, [&](const Subset& S) {
        RatMatrix rows = X.submatrix(S).transpose();
        if (rows.rank() != n - 1) return;
        auto ns = rows.nullspace();
        IntVec eta = primitive_normal(ns[0]);
        if (!seen.insert(eta).second) return;
        FacetHyperplane h;
        h.normal = eta;
        for (std::size_t i = 0; i < N; ++i)
            if (dot_int(eta, X.col(i)).is_zero()) h.on.push_back(static_cast<int>(i));
        h.mult = N - h.on.size();
        out.push_back(std::move(h));
    });
    std::sort(out.begin(), out.end(),
              [](const FacetHyperplane& a, const FacetHyperplane& b) { return a.normal < b.normal; });
    return out;
}

Subset xset(const GroundSet& X, const Subset& I) {
    if (!is_independent(X, I)) throw DependentInput();
    Subset out;
    for (std::size_t y = 0; y < X.size(); ++y) {
        Subset prefix;
        for (int b : I)
            if (b <= static_cast<int>(y)) prefix.push_back(b);
        if (!in_span(X, prefix, y)) out.push_back(static_cast<int>(y));
    }
    return out;
}

std::size_t val(const GroundSet& X, const Subset& I) { return xset(X, I).size(); }

Subset complement(std::size_t n, const Subset& S) {
    Subset out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (k < S.size() && S[k] == static_cast<int>(i))
            ++k;
        else
            out.push_back(static_cast<int>(i));
    }
    return out;
}

Subset set_union(const Subset& a, const Subset& b) {
    Subset out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Subset set_minus(const Subset& a, const Subset& b) {
    Subset out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_long(const GroundSet& X, const Subset& Y) {
    return X.submatrix(complement(X.size(), Y)).rank() < X.dim();
}

bool is_short(const GroundSet& X, const Subset& Y) {
    return X.submatrix(complement(X.size(), Y)).rank() == X.dim();
}

bool is_very_short(const GroundSet& X, const Subset& Y) {
    Subset rest = complement(X.size(), Y);
    if (X.submatrix(rest).rank() != X.dim()) return false;
    for (int x : rest) {
        Subset smaller;
        for (int e : rest)
            if (e != x) smaller.push_back(e);
        if (X.submatrix(smaller).rank() != X.dim()) return false;
    }
    return true;
}

bool hits_all(const Subset& Y, const std::vector<Subset>& family) {
    for (const Subset& F : family) {
        bool hit = false;
        for (int e : F)
            if (std::binary_search(Y.begin(), Y.end(), e)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

namespace {

bool subset_precedes(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

std::vector<Subset> minimal_hitting_sets(std::size_t ground, const std::vector<Subset>& family,
                                         std::size_t cap) {
    if (ground > cap) throw GroundSetTooLarge(ground, cap);
    for (const Subset& F : family)
        if (F.empty()) return {};
    std::set<Subset> found;
    Subset cur;
    std::function<void(std::vector<const Subset*>)> rec = [&](std::vector<const Subset*> unhit) {
        if (unhit.empty()) {
            found.insert(cur);
            return;
        }
        const Subset& F = *unhit.front();
        for (int e : F) {
            cur.insert(std::lower_bound(cur.begin(), cur.end(), e), e);
            std::vector<const Subset*> next;
            for (const Subset* m : unhit)
                if (!std::binary_search(m->begin(), m->end(), e)) next.push_back(m);
            rec(std::move(next));
            cur.erase(std::lower_bound(cur.begin(), cur.end(), e));
        }
    };
    std::vector<const Subset*> all;
    for (const Subset& F : family) all.push_back(&F);
    rec(std::move(all));

    std::vector<Subset> out;
    for (const Subset& S : found) {
        bool minimal = true;
        for (int e : S) {
            Subset without;
            for (int x : S)
                if (x != e) without.push_back(x);
            if (hits_all(without, family)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(S);
    }
    std::sort(out.begin(), out.end(), subset_precedes);
    return out;
}

std::vector<Subset> minimal_long_central(const GroundSet& X) {
    std::vector<Subset> out;
    for (const FacetHyperplane& h : facet_hyperplanes(X))
        out.push_back(complement(X.size(), h.on));
    std::sort(out.begin(), out.end(), subset_precedes);
    return out;
}

std::vector<Subset> minimal_long_external(const GroundSet& X, const ExternalFrame& f,
                                          std::size_t cap) {
    return minimal_hitting_sets(X.size() + X.dim(), external_bases(X, f), cap);
}

std::vector<Subset> minimal_long_internal(const GroundSet& X, std::size_t cap) {
    return minimal_hitting_sets(X.size(), internal_bases(X), cap);
}

std::vector<Subset> very_short_sets(const GroundSet& X, std::size_t cap) {
    std::vector<Subset> out;
    for_each_subset(X.size(), [&](const Subset& Y) {
        if (is_very_short(X, Y)) out.push_back(Y);
    }, cap);
    return out;
}

}  // namespace zonalg
