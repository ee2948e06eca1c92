#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "zonalg/matrix.hpp"

namespace zonalg {

// Ordered multiset of nonzero integer vectors spanning R^n, kept as columns.
// Column order is part of the value; duplicates are allowed.
class GroundSet {
public:
    GroundSet(std::size_t n, std::vector<IntVec> columns);
    static GroundSet from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t dim() const { return n_; }
    std::size_t size() const { return cols_.size(); }
    const IntVec& col(std::size_t i) const;
    const std::vector<IntVec>& columns() const { return cols_; }

    RatMatrix submatrix(const std::vector<int>& idx) const;
    GroundSet permuted(const std::vector<int>& order) const;
    GroundSet appended(const std::vector<IntVec>& extra) const;

    std::vector<std::vector<long long>> to_rows() const;

    friend bool operator==(const GroundSet& a, const GroundSet& b) {
        return a.n_ == b.n_ && a.cols_ == b.cols_;
    }

private:
    std::size_t n_;
    std::vector<IntVec> cols_;
};

struct FacetHyperplane {
    IntVec normal;        // primitive, first nonzero entry positive
    std::vector<int> on;  // column indices lying on the hyperplane, ascending
    std::size_t mult;     // number of columns off the hyperplane
};

// Ordered completion basis appended after the configuration columns.
struct ExternalFrame {
    std::vector<IntVec> basis;
    bool general_position = false;
    unsigned attempts = 0;
};

ExternalFrame standard_frame(std::size_t n);
// Deterministic moment-curve candidates, first one verified to be in general
// position with respect to X wins.
ExternalFrame moment_frame(const GroundSet& X, unsigned max_attempts = 32);
bool frame_general_position(const GroundSet& X, const ExternalFrame& f);
GroundSet extended(const GroundSet& X, const ExternalFrame& f);

}  // namespace zonalg
