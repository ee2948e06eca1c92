#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "zonalg/rat.hpp"

namespace zonalg {

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Dense matrix of exact rationals, row major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVec>& rows);
    static RatMatrix from_columns(const std::vector<RatVec>& cols);
    static RatMatrix from_int_columns(const std::vector<IntVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatVec row(std::size_t i) const;
    RatVec col(std::size_t j) const;
    RatMatrix transpose() const;
    void append_row(const RatVec& r);

    // Fraction-free Bareiss elimination; pivots are the first nonzero entry
    // in column order, so results are deterministic for a given matrix.
    Rat det() const;
    std::size_t rank() const;

    // Reduced row echelon form over the rationals. Pivot rule: leftmost
    // unsettled column, topmost nonzero row.
    RatMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

    // Canonical kernel basis: one vector per free column, unit entry at the
    // free column, listed in ascending free-column order.
    std::vector<RatVec> nullspace() const;

    // Particular solution with free variables at zero; nullopt if infeasible.
    std::optional<RatVec> solve(const RatVec& rhs) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

Rat dot(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& v, const Rat& c);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
bool is_zero_vec(const RatVec& v);
RatVec to_rat_vec(const IntVec& v);

}  // namespace zonalg
