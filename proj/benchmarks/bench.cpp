#include <benchmark/benchmark.h>

#include <zonalg/geometry.hpp>
#include <zonalg/groundset.hpp>
#include <zonalg/ideals.hpp>
#include <zonalg/matroid.hpp>
#include <zonalg/spaces.hpp>

namespace {

using namespace zonalg;

GroundSet triangle() {
    return GroundSet(2, {{1, 0}, {0, 1}, {1, -1}});
}

GroundSet complete4() {
    return GroundSet(3, {{1, 0, 0}, {1, -1, 0}, {1, 0, -1}, {0, 1, 0}, {0, 1, -1}, {0, 0, 1}});
}

void bm_bases_complete4(benchmark::State& state) {
    GroundSet X = complete4();
    for (auto _ : state) benchmark::DoNotOptimize(bases(X));
}
BENCHMARK(bm_bases_complete4);

void bm_hilbert_external_complete4(benchmark::State& state) {
    GroundSet X = complete4();
    for (auto _ : state) benchmark::DoNotOptimize(hilbert(X, SpaceKind::External));
}
BENCHMARK(bm_hilbert_external_complete4);

void bm_kernel_external_triangle(benchmark::State& state) {
    GroundSet X = triangle();
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel(igens(X, 1), default_icap(X, 1)));
    }
}
BENCHMARK(bm_kernel_external_triangle);

void bm_pspace_central_complete4(benchmark::State& state) {
    GroundSet X = complete4();
    for (auto _ : state) benchmark::DoNotOptimize(pspace(X, SpaceKind::Central));
}
BENCHMARK(bm_pspace_central_complete4);

void bm_lattice_points_complete4(benchmark::State& state) {
    GroundSet X = complete4();
    for (auto _ : state) benchmark::DoNotOptimize(lattice_points(X, false));
}
BENCHMARK(bm_lattice_points_complete4);

void bm_least_space_vertices(benchmark::State& state) {
    GroundSet X = complete4();
    ArrangementData A = generic_lambda(X);
    PointSet V = all_vertices(A);
    for (auto _ : state) {
        benchmark::DoNotOptimize(least_space(V, X.dim(), X.size() + 1));
    }
}
BENCHMARK(bm_least_space_vertices);

}  // namespace

BENCHMARK_MAIN();
