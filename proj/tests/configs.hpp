#pragma once
// Fixed configurations used across the test suite.

#include <zonalg/groundset.hpp>

namespace cfg {

// Triangle graph: columns (1,0),(0,1),(1,-1).
inline zonalg::GroundSet k3() {
    return zonalg::GroundSet(2, {{1, 0}, {0, 1}, {1, -1}});
}

// Complete graph on four vertices, 3x6.
inline zonalg::GroundSet k4() {
    return zonalg::GroundSet::from_rows({{1, 0, 0, 1, 1, 0},
                                         {0, 1, 0, -1, 0, 1},
                                         {0, 0, 1, 0, -1, -1}});
}

// 2x4 with a repeated column: (1,0),(1,0),(0,1),(1,1).
inline zonalg::GroundSet rep4() {
    return zonalg::GroundSet::from_rows({{1, 1, 0, 1}, {0, 0, 1, 1}});
}

// 3x5 with a non-unimodular flavor: includes (1,2,1).
inline zonalg::GroundSet mix5() {
    return zonalg::GroundSet::from_rows({{1, 0, 0, 1, 1}, {0, 1, 0, 2, 1}, {0, 0, 1, 1, 1}});
}

// Smallest non-unimodular plane configuration: (1,0),(1,2).
inline zonalg::GroundSet skew2() {
    return zonalg::GroundSet(2, {{1, 0}, {1, 2}});
}

inline zonalg::GroundSet identity2() {
    return zonalg::GroundSet(2, {{1, 0}, {0, 1}});
}

inline zonalg::GroundSet identity3() {
    return zonalg::GroundSet(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

}  // namespace cfg
