// Micro-benchmarks for the hot paths: convolution/pooling, projection, and
// the skein-recursion polynomial engine.

#include "knotclass/curve.hpp"
#include "knotclass/diagram.hpp"
#include "knotclass/errors.hpp"
#include "knotclass/featurize.hpp"
#include "knotclass/kernels.hpp"
#include "knotclass/knot.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

using namespace knotclass;

namespace {

ChannelPlane random_plane(int side, std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    ChannelPlane p(side, side);
    for (double& v : p.values) v = dist(gen);
    return p;
}

ClosedPolyline random_polygon(int n, std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ClosedPolyline poly;
    poly.image_id = "bench";
    for (int i = 0; i < n; ++i) poly.vertices.push_back({dist(gen), dist(gen), dist(gen)});
    return poly;
}

void bm_convolve(benchmark::State& state) {
    ChannelPlane plane = random_plane(int(state.range(0)), 1);
    Kernel k = default_bank().kernels[0];
    for (auto _ : state) benchmark::DoNotOptimize(convolve3x3(plane, k));
}

void bm_softmax_pool(benchmark::State& state) {
    ChannelPlane plane = random_plane(int(state.range(0)), 2);
    int target = make_schedule(plane.width, 4).targets[0];
    for (auto _ : state) benchmark::DoNotOptimize(softmax_pool(plane, target, 1.0));
}

void bm_reduce_channel(benchmark::State& state) {
    ChannelPlane plane = random_plane(int(state.range(0)), 3);
    Kernel k = default_bank().kernels[4];
    PoolSchedule schedule = make_schedule(plane.width, 4);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_channel(plane, k, schedule, 1.0));
}

void bm_project(benchmark::State& state) {
    ClosedPolyline poly = random_polygon(int(state.range(0)), 4);
    Direction d = fibonacci_direction(0, 100);
    for (auto _ : state) benchmark::DoNotOptimize(project(poly, d));
}

void bm_homfly_torus_braid(benchmark::State& state) {
    std::vector<int> word(std::size_t(state.range(0)), 1);
    LinkCode code = braid_closure(word, 2);
    for (auto _ : state) benchmark::DoNotOptimize(homfly(code));
}

void bm_homfly_random_diagram(benchmark::State& state) {
    ClosedPolyline poly = random_polygon(int(state.range(0)), 5);
    Diagram best;
    int crossings = -1;
    for (int i = 0; i < 50; ++i) {
        try {
            Diagram d = project(poly, fibonacci_direction(i, 50));
            if (crossings < 0 || int(d.crossings.size()) < crossings) {
                crossings = int(d.crossings.size());
                best = d;
            }
        } catch (const DegenerateProjection&) {
        }
    }
    state.counters["crossings"] = crossings;
    for (auto _ : state) benchmark::DoNotOptimize(homfly(best.code, 100));
}

BENCHMARK(bm_convolve)->Arg(64)->Arg(256)->Arg(950);
BENCHMARK(bm_softmax_pool)->Arg(64)->Arg(256)->Arg(950);
BENCHMARK(bm_reduce_channel)->Arg(64)->Arg(256);
BENCHMARK(bm_project)->Arg(24)->Arg(52)->Arg(200);
BENCHMARK(bm_homfly_torus_braid)->Arg(3)->Arg(7)->Arg(12);
BENCHMARK(bm_homfly_random_diagram)->Arg(8)->Arg(10)->Arg(12);

} // namespace

BENCHMARK_MAIN();
