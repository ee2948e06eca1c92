#include "zonalg/matrix.hpp"

#include <algorithm>
#include <utility>

#include "zonalg/errors.hpp"

namespace zonalg {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols) {
    if (cols.empty()) return RatMatrix();
    RatMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) throw DimensionMismatch("ragged column list");
        for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RatMatrix RatMatrix::from_int_columns(const std::vector<IntVec>& cols) {
    std::vector<RatVec> rcols;
    rcols.reserve(cols.size());
    for (const auto& c : cols) rcols.push_back(to_rat_vec(c));
    return from_columns(rcols);
}

RatVec RatMatrix::row(std::size_t i) const {
    RatVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RatVec RatMatrix::col(std::size_t j) const {
    RatVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

void RatMatrix::append_row(const RatVec& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DimensionMismatch("appended row has wrong length");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

namespace {

// Clears denominators row by row; row scaling multiplies det by the scale
// and leaves rank unchanged.
std::vector<std::vector<Int>> integerize(const RatMatrix& m, std::vector<Int>* scales) {
    std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, m.at(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& x = m.at(i, j);
            out[i][j] = x.num() * (l / x.den());
        }
        if (scales) scales->push_back(l);
    }
    return out;
}

}  // namespace

Rat RatMatrix::det() const {
    if (rows_ != cols_) throw NonSquare();
    if (rows_ == 0) return Rat(1);
    std::vector<Int> scales;
    auto m = integerize(*this, &scales);
    const std::size_t n = rows_;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    if (sign < 0) d = -d;
    Int denom = 1;
    for (const Int& s : scales) denom *= s;
    return Rat(d, denom);
}

std::size_t RatMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    auto m = integerize(*this, nullptr);
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m[piv][c].is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != r) std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            for (std::size_t j = c + 1; j < cols_; ++j)
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

RatMatrix RatMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
    RatMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return m;
}

std::vector<RatVec> RatMatrix::nullspace() const {
    std::vector<std::size_t> pivots;
    RatMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols_);
        v[f] = Rat(1);
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -r.at(p, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> RatMatrix::solve(const RatVec& rhs) const {
    if (rhs.size() != rows_) throw DimensionMismatch("rhs length != rows");
    RatMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = rhs[i];
    }
    std::vector<std::size_t> pivots;
    RatMatrix r = aug.rref(&pivots);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    RatVec x(cols_);
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = r.at(p, cols_);
    return x;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot of unequal lengths");
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec scale(const RatVec& v, const Rat& c) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
    return out;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("add of unequal lengths");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sub of unequal lengths");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

RatVec to_rat_vec(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

}  // namespace zonalg
