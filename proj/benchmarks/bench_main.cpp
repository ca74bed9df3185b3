#include <benchmark/benchmark.h>

#include "slicestar/reg_check.hpp"
#include "slicestar/star.hpp"

using namespace slicestar;

namespace {

Domain bench_ball() { return make_euclidean_ball(std::vector<double>{0.0}, 1.0); }

void BM_HamiltonProduct(benchmark::State& state) {
    Quaternion p{0.3, -1.2, 0.8, 0.1}, q{1.1, 0.4, -0.7, 2.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(p = p * q);
    }
}
BENCHMARK(BM_HamiltonProduct);

void BM_SphereSample(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sphere_sample(static_cast<int>(state.range(0)), 7));
    }
}
BENCHMARK(BM_SphereSample)->Arg(50)->Arg(200);

void BM_SliceUnits(benchmark::State& state) {
    const Domain ball = bench_ball();
    const auto units = sphere_sample(static_cast<int>(state.range(0)), 7);
    const ComplexPath gamma = refine(
        straight_path_to(SlicePoint::make({0.4}, {0.6}, unit_j())), 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(slice_units(ball, gamma, units));
    }
}
BENCHMARK(BM_SliceUnits)->Arg(50)->Arg(200);

void BM_SubStem(benchmark::State& state) {
    const Domain ball = bench_ball();
    const auto units = sphere_sample(50, 7);
    const PathSliceFn f = make_polynomial(
        {Quaternion{0.2, 1, 0, -1}, Quaternion(1.0), Quaternion{0, 0, 1, 0}},
        ball);
    const ComplexPath gamma = refine(
        straight_path_to(SlicePoint::make({0.4}, {0.6}, unit_j())), 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sub_stem(f, gamma, units));
    }
}
BENCHMARK(BM_SubStem);

void BM_StarEval(benchmark::State& state) {
    const Domain ball = bench_ball();
    const auto units = sphere_sample(50, 7);
    const PathSliceFn f = make_identity(ball);
    const PathSliceFn product =
        fn_star(f, f, ball, ball,
                StarHypothesis::override_flag("benchmark ball"), units);
    const SlicePoint q = SlicePoint::make({0.4}, {0.6}, unit_j());
    for (auto _ : state) {
        benchmark::DoNotOptimize(product.eval(q));
    }
}
BENCHMARK(BM_StarEval);

void BM_GridBfsPath(benchmark::State& state) {
    const Domain u = make_nonaxisym_union();
    const SlicePoint lens = SlicePoint::make({1.0}, {1.0}, unit_i());
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_real_path(u, lens, {}));
    }
}
BENCHMARK(BM_GridBfsPath);

void BM_CrResidual(benchmark::State& state) {
    const Domain ball = bench_ball();
    const PathSliceFn f = make_exp_series(ball);
    const auto units = sphere_sample(6, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cr_residual(f, ball, units, 9, 1e-3, false));
    }
}
BENCHMARK(BM_CrResidual);

}  // namespace

BENCHMARK_MAIN();
