#include "zonalg/groundset.hpp"

#include <algorithm>

#include "zonalg/errors.hpp"
#include "zonalg/matroid.hpp"

namespace zonalg {

GroundSet::GroundSet(std::size_t n, std::vector<IntVec> columns) : n_(n), cols_(std::move(columns)) {
    if (n_ == 0) throw DimensionMismatch("ambient dimension must be positive");
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (cols_[i].size() != n_) throw DimensionMismatch("column has wrong length");
        bool zero = std::all_of(cols_[i].begin(), cols_[i].end(),
                                [](const Int& v) { return v.is_zero(); });
        if (zero) throw ZeroColumn(i);
    }
    std::vector<int> all(cols_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    if (submatrix(all).rank() != n_) throw RankDeficient();
}

GroundSet GroundSet::from_rows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) throw DimensionMismatch("empty matrix");
    std::size_t n = rows.size(), N = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != N) throw DimensionMismatch("ragged matrix");
    std::vector<IntVec> cols(N, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < N; ++j) cols[j][i] = rows[i][j];
    return GroundSet(n, std::move(cols));
}

const IntVec& GroundSet::col(std::size_t i) const {
    if (i >= cols_.size()) throw BadIndex("column index " + std::to_string(i));
    return cols_[i];
}

RatMatrix GroundSet::submatrix(const std::vector<int>& idx) const {
    RatMatrix m(n_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const IntVec& c = col(static_cast<std::size_t>(idx[j]));
        for (std::size_t i = 0; i < n_; ++i) m.at(i, j) = Rat(c[i]);
    }
    return m;
}

GroundSet GroundSet::permuted(const std::vector<int>& order) const {
    if (order.size() != cols_.size()) throw DimensionMismatch("order length != column count");
    std::vector<bool> seen(cols_.size(), false);
    std::vector<IntVec> out;
    out.reserve(cols_.size());
    for (int i : order) {
        if (i < 0 || static_cast<std::size_t>(i) >= cols_.size() || seen[i])
            throw BadIndex("order is not a permutation");
        seen[i] = true;
        out.push_back(cols_[i]);
    }
    return GroundSet(n_, std::move(out));
}

GroundSet GroundSet::appended(const std::vector<IntVec>& extra) const {
    std::vector<IntVec> out = cols_;
    out.insert(out.end(), extra.begin(), extra.end());
    return GroundSet(n_, std::move(out));
}

std::vector<std::vector<long long>> GroundSet::to_rows() const {
    std::vector<std::vector<long long>> rows(n_, std::vector<long long>(cols_.size()));
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (std::size_t i = 0; i < n_; ++i) rows[i][j] = cols_[j][i].convert_to<long long>();
    return rows;
}

ExternalFrame standard_frame(std::size_t n) {
    ExternalFrame f;
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n, 0);
        e[j] = 1;
        f.basis.push_back(std::move(e));
    }
    return f;
}

GroundSet extended(const GroundSet& X, const ExternalFrame& f) {
    if (f.basis.size() != X.dim()) throw DimensionMismatch("frame size != ambient dimension");
    return X.appended(f.basis);
}

bool frame_general_position(const GroundSet& X, const ExternalFrame& f) {
    GroundSet Xp = extended(X, f);
    const std::size_t n = X.dim(), nx = X.size(), total = Xp.size();
    bool ok = true;
    for (std::size_t bi = nx; bi < total && ok; ++bi) {
        for_each_combination(total, n - 1, [&](const Subset& T) {
            if (!ok) return;
            if (std::binary_search(T.begin(), T.end(), static_cast<int>(bi))) return;
            if (Xp.submatrix(T).rank() != n - 1) return;
            if (in_span(Xp, T, bi)) ok = false;
        });
    }
    return ok;
}

ExternalFrame moment_frame(const GroundSet& X, unsigned max_attempts) {
    const std::size_t n = X.dim();
    for (unsigned a = 0; a < max_attempts; ++a) {
        ExternalFrame f;
        f.attempts = a + 1;
        for (std::size_t j = 0; j < n; ++j) {
            Int param = static_cast<long long>(a) * static_cast<long long>(n) +
                        static_cast<long long>(j) + 2;
            IntVec c(n);
            Int p = 1;
            for (std::size_t i = 0; i < n; ++i) {
                c[i] = p;
                p *= param;
            }
            f.basis.push_back(std::move(c));
        }
        if (frame_general_position(X, f)) {
            f.general_position = true;
            return f;
        }
    }
    throw GenericityFailure("no moment-curve frame in general position after " +
                            std::to_string(max_attempts) + " attempts");
}

}  // namespace zonalg
