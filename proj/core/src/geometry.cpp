#include "zonalg/geometry.hpp"

#include <algorithm>
#include <functional>

#include "zonalg/errors.hpp"

namespace zonalg {

namespace {

Rat dot_int(const IntVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

void sort_points(PointSet& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

ZonotopeH zonotope_h(const GroundSet& X) {
    ZonotopeH Z;
    Z.n = X.dim();
    for (const auto& h : facet_hyperplanes(X)) {
        Slab s{h.normal, Int(0), Int(0)};
        for (const auto& x : X.columns()) {
            Int d(0);
            for (std::size_t i = 0; i < x.size(); ++i) d += h.normal[i] * x[i];
            if (d < 0) s.lo += d;
            if (d > 0) s.hi += d;
        }
        Z.slabs.push_back(std::move(s));
    }
    return Z;
}

bool zonotope_contains(const ZonotopeH& Z, const RatVec& p, bool open) {
    if (p.size() != Z.n) throw DimensionMismatch("point dimension");
    for (const auto& s : Z.slabs) {
        Rat v = dot_int(s.normal, p);
        if (open) {
            if (v <= Rat(s.lo) || v >= Rat(s.hi)) return false;
        } else {
            if (v < Rat(s.lo) || v > Rat(s.hi)) return false;
        }
    }
    return true;
}

namespace {

// Coordinate bounding box of the zonotope: per axis, the sums of the
// negative and of the positive column entries.
void coordinate_box(const GroundSet& X, IntVec& lo, IntVec& hi) {
    lo.assign(X.dim(), Int(0));
    hi.assign(X.dim(), Int(0));
    for (const auto& x : X.columns())
        for (std::size_t i = 0; i < X.dim(); ++i) {
            if (x[i] < 0) lo[i] += x[i];
            if (x[i] > 0) hi[i] += x[i];
        }
}

void enumerate_box(const IntVec& lo, const IntVec& hi,
                   const std::function<void(const IntVec&)>& fn) {
    std::size_t n = lo.size();
    IntVec cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            fn(cur);
            return;
        }
        for (Int v = lo[i]; v <= hi[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

RatVec int_point(const IntVec& a) {
    RatVec p;
    p.reserve(a.size());
    for (const auto& v : a) p.push_back(Rat(v));
    return p;
}

}  // namespace

PointSet lattice_points(const GroundSet& X, bool open) {
    ZonotopeH Z = zonotope_h(X);
    IntVec lo, hi;
    coordinate_box(X, lo, hi);
    PointSet out;
    enumerate_box(lo, hi, [&](const IntVec& a) {
        RatVec p = int_point(a);
        if (zonotope_contains(Z, p, open)) out.push_back(std::move(p));
    });
    sort_points(out);
    return out;
}

Rat volume(const GroundSet& X) {
    Rat v(0);
    for (const auto& B : bases(X)) v += X.submatrix(B).det().abs();
    return v;
}

bool t_certificate(const GroundSet& X, const RatVec& t) {
    for (const auto& h : facet_hyperplanes(X))
        if (dot_int(h.normal, t).is_integer()) return false;
    return true;
}

GenericPoint generic_t(const GroundSet& X, unsigned seed, unsigned max_attempts) {
    for (unsigned k = 0; k < max_attempts; ++k) {
        Int b(seed + k + 2);
        Int q(2 * (seed + k) + 3);
        RatVec t;
        Int p = b;
        for (std::size_t j = 0; j < X.dim(); ++j, p *= b) t.push_back(Rat(p, q));
        if (t_certificate(X, t)) return {t, k + 1};
    }
    throw GenericityFailure("no valid translation point");
}

PointSet zxt(const GroundSet& X, const RatVec& t) {
    if (t.size() != X.dim()) throw DimensionMismatch("translation point dimension");
    ZonotopeH Z = zonotope_h(X);
    IntVec blo, bhi;
    coordinate_box(X, blo, bhi);
    IntVec lo, hi;
    for (std::size_t i = 0; i < X.dim(); ++i) {
        lo.push_back((t[i] - Rat(bhi[i])).ceil());
        hi.push_back((t[i] - Rat(blo[i])).floor());
    }
    PointSet out;
    enumerate_box(lo, hi, [&](const IntVec& a) {
        RatVec diff;
        for (std::size_t i = 0; i < X.dim(); ++i) diff.push_back(t[i] - Rat(a[i]));
        if (zonotope_contains(Z, diff, false)) out.push_back(int_point(a));
    });
    sort_points(out);
    return out;
}

namespace {

RatVec basis_vertex(const GroundSet& X, const RatVec& lambda, const Subset& B) {
    RatMatrix M = X.submatrix(B).transpose();
    RatVec rhs;
    for (int i : B) rhs.push_back(lambda[static_cast<std::size_t>(i)]);
    auto v = M.solve(rhs);
    if (!v) throw RankDeficient("arrangement vertex solve");
    return *v;
}

}  // namespace

bool lambda_certificate(const GroundSet& X, const RatVec& lambda) {
    for (const auto& B : bases(X)) {
        RatVec v = basis_vertex(X, lambda, B);
        for (std::size_t c = 0; c < X.size(); ++c) {
            if (std::binary_search(B.begin(), B.end(), static_cast<int>(c))) continue;
            if (dot_int(X.col(c), v) == lambda[c]) return false;
        }
    }
    return true;
}

ArrangementData generic_lambda(const GroundSet& X, unsigned seed, unsigned max_attempts) {
    for (unsigned k = 0; k < max_attempts; ++k) {
        Int b(seed + k + 2);
        RatVec lambda;
        Int p = b;
        for (std::size_t i = 0; i < X.size(); ++i, p *= b) lambda.push_back(Rat(p));
        if (!lambda_certificate(X, lambda)) continue;
        ArrangementData A{X, lambda, k + 1, bases(X), {}};
        for (const auto& B : A.basis_list) A.vertices.push_back(basis_vertex(X, lambda, B));
        return A;
    }
    throw GenericityFailure("no generic offset vector");
}

PointSet all_vertices(const ArrangementData& A) {
    PointSet out = A.vertices;
    sort_points(out);
    return out;
}

PointSet external_vertices(const ArrangementData& A, const GroundSet& X, const ExternalFrame& f) {
    if (!(extended(X, f) == A.ground))
        throw WrongGroundSet("arrangement is not over the extended configuration");
    PointSet out;
    for (const auto& B : external_bases(X, f)) {
        auto it = std::lower_bound(A.basis_list.begin(), A.basis_list.end(), B);
        if (it == A.basis_list.end() || *it != B)
            throw WrongGroundSet("external basis missing from the arrangement");
        out.push_back(A.vertices[static_cast<std::size_t>(it - A.basis_list.begin())]);
    }
    sort_points(out);
    return out;
}

PointSet internal_vertices(const ArrangementData& A, const GroundSet& X) {
    if (!(X == A.ground)) throw WrongGroundSet("arrangement is not over the configuration");
    PointSet out;
    for (const auto& B : internal_bases(X)) {
        auto it = std::lower_bound(A.basis_list.begin(), A.basis_list.end(), B);
        if (it == A.basis_list.end() || *it != B)
            throw WrongGroundSet("internal basis missing from the arrangement");
        out.push_back(A.vertices[static_cast<std::size_t>(it - A.basis_list.begin())]);
    }
    sort_points(out);
    return out;
}

GradedPolySpace least_space(const PointSet& sigma, std::size_t n, int degcap) {
    auto monos = monomials_up_to_degree(n, degcap);
    std::vector<RatVec> rows;
    for (const auto& alpha : sigma) {
        if (alpha.size() != n) throw DimensionMismatch("point dimension");
        TruncatedSeries e = TruncatedSeries::exponential(alpha, degcap);
        RatVec row;
        row.reserve(monos.size());
        for (const auto& m : monos) row.push_back(e.coeff(m));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return make_graded(n, {});
    std::vector<std::size_t> pivots;
    RatMatrix R = RatMatrix::from_rows(rows).rref(&pivots);
    if (pivots.size() < sigma.size()) throw TruncationTooLow("points collide under truncation");
    std::vector<MPoly> least;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        int d = total_degree(monos[pivots[i]]);
        if (d >= degcap) throw TruncationTooLow("least term at the truncation degree");
        MPoly f(n);
        for (std::size_t c = 0; c < monos.size(); ++c) {
            if (total_degree(monos[c]) != d) continue;
            Rat cf = R.at(i, c);
            if (!cf.is_zero()) f.set_coeff(monos[c], cf);
        }
        least.push_back(std::move(f));
    }
    return make_graded(n, least);
}

bool correctness_check(const GradedPolySpace& P, const PointSet& sigma) {
    if (P.dim() != sigma.size()) throw DimensionMismatch("dimension does not match point count");
    auto basis = P.flat();
    RatMatrix E(basis.size(), sigma.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < sigma.size(); ++j)
            E.at(i, j) = basis[i].eval(sigma[j]);
    return !E.det().is_zero();
}

}  // namespace zonalg
