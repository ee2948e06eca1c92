#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <zonalg/errors.hpp>
#include <zonalg/parking.hpp>
#include <zonalg/spaces.hpp>

#include "oracles.hpp"

using namespace zonalg;

namespace {

std::vector<ParkingFn> sorted(std::vector<ParkingFn> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("graphs become configurations edge by edge") {
    Graph tri = complete_graph(3);
    REQUIRE(tri.edges.size() == 3);
    GroundSet X = graph_to_groundset(tri);
    CHECK(X.dim() == 2);
    CHECK(X.col(0) == IntVec{-1, 0});
    CHECK(X.col(1) == IntVec{0, -1});
    CHECK(X.col(2) == IntVec{1, -1});

    GroundSet P = graph_to_groundset({3, {{0, 1}, {1, 2}}});
    CHECK(P.size() == 2);
    CHECK(P.col(1) == IntVec{1, -1});

    // Endpoint order inside an edge does not matter.
    GroundSet R = graph_to_groundset({3, {{1, 0}, {2, 0}, {2, 1}}});
    CHECK(R == X);

    CHECK_THROWS_AS(graph_to_groundset({4, {{0, 1}, {2, 3}}}), Disconnected);
    CHECK_THROWS_AS(graph_to_groundset({3, {{0, 7}, {1, 2}}}), BadIndex);
}

TEST_CASE("two-car labelings freeze") {
    auto ext = sorted(external_parking(2));
    std::vector<ParkingFn> want = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}};
    CHECK(ext == want);
    auto in = internal_parking(2);
    REQUIRE(in.size() == 1);
    CHECK(in[0] == ParkingFn{0, 0});
}

TEST_CASE("two-car degree profile matches the triangle series") {
    auto ext = external_parking(2);
    std::vector<std::size_t> by_degree(4, 0);
    for (const auto& r : ext) {
        int d = 0;
        for (int v : r) d += v;
        by_degree[static_cast<std::size_t>(d)] += 1;
    }
    GroundSet X = graph_to_groundset(complete_graph(3));
    std::vector<std::size_t> h = hilbert(X, SpaceKind::External);
    CHECK(by_degree == h);
}

TEST_CASE("predicate spot values") {
    CHECK(is_external_parking({0, 0}));
    CHECK(is_external_parking({1, 2}));
    CHECK(!is_external_parking({2, 2}));
    CHECK(!is_external_parking({2, 1}));
    CHECK(is_internal_parking({0, 0}));
    CHECK(!is_internal_parking({0, 1}));
    CHECK(!is_internal_parking({1, 0}));
}

TEST_CASE("entry bound is sound") {
    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
        auto base_ext = sorted(external_parking(n));
        auto wide_ext = sorted(external_parking(n, static_cast<int>(n) + 1));
        CHECK(base_ext == wide_ext);
        auto base_in = sorted(internal_parking(n));
        auto wide_in = sorted(internal_parking(n, static_cast<int>(n) + 1));
        CHECK(base_in == wide_in);
        for (const auto& r : base_ext)
            for (int v : r) CHECK(v <= static_cast<int>(n));
    }
}

TEST_CASE("three-car counts match the complete-graph matroid") {
    GroundSet X = graph_to_groundset(complete_graph(4));
    CHECK(external_parking(3).size() == oracle::oindependents(X).size());
    CHECK(external_parking(3).size() == 38);
    CHECK(internal_parking(3).size() == oracle::ointernal_bases(X).size());
    CHECK(internal_parking(3).size() == 6);
}

TEST_CASE("labelings pair with independent sets degree by degree") {
    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
        ParkingMatchReport rep = parking_basis_match(n);
        CHECK(rep.ok);
        CHECK(rep.pairs == rep.functions.size());
        CHECK(rep.pairs == external_parking(n).size());
        GroundSet X = graph_to_groundset(complete_graph(n + 1));
        REQUIRE(rep.independents.size() == rep.functions.size());
        for (std::size_t i = 0; i < rep.functions.size(); ++i) {
            int deg = 0;
            for (int v : rep.functions[i]) deg += v;
            CHECK(static_cast<std::size_t>(deg) == val(X, rep.independents[i]));
        }
        std::vector<Subset> used = rep.independents;
        std::sort(used.begin(), used.end());
        CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
    }
}
