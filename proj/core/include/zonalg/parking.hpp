#pragma once
#include <utility>
#include <vector>

#include "zonalg/groundset.hpp"
#include "zonalg/matroid.hpp"

namespace zonalg {

// Undirected connected multigraph on vertex labels 0..vertices-1.
struct Graph {
    std::size_t vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

Graph complete_graph(std::size_t vertex_count);

// Edge {i,j}, i < j, becomes the column e_i - e_j with e_0 = 0, so the
// configuration lives in R^(vertices-1). Column order follows edge order.
GroundSet graph_to_groundset(const Graph& g);

// Vertex labels r(1..n) stored 0-based: r[v-1].
using ParkingFn = std::vector<int>;

bool is_external_parking(const ParkingFn& r);
bool is_internal_parking(const ParkingFn& r);

// Complete-graph enumerations over entries 0..bound; bound n suffices and the
// enumerators use it, the parameter exists so tests can scan past it.
std::vector<ParkingFn> external_parking(std::size_t n, int bound = -1);
std::vector<ParkingFn> internal_parking(std::size_t n, int bound = -1);

struct ParkingMatchReport {
    bool ok = false;
    std::size_t pairs = 0;
    std::vector<ParkingFn> functions;
    std::vector<Subset> independents;  // matched partner per function
};
ParkingMatchReport parking_basis_match(std::size_t n);

}  // namespace zonalg
