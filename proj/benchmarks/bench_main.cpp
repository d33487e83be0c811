#include "fracbound/fraccalc.hpp"
#include "fracbound/generators.hpp"
#include "fracbound/semigroup.hpp"
#include "fracbound/stochastic.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <memory>

using namespace fracbound;

static void BM_GrunwaldTable(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(GrunwaldTable(1.5, k).coeffs().data());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GrunwaldTable)->Arg(1 << 10)->Arg(1 << 14);

static void BM_InterpolationMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GeneratorContext ctx(FractionalOrder(1.5), BoundaryPair::parse("N*D"), n);
    Eigen::MatrixXd M;
    double lam = 0.0;
    for (auto _ : state) {
        ctx.interpolation_matrix(lam, M);
        benchmark::DoNotOptimize(M.data());
        lam = lam >= 1.0 ? 0.0 : std::min(1.0, lam + 0.01);
    }
    state.SetItemsProcessed(state.iterations() * (n + 1) * (n + 1));
}
BENCHMARK(BM_InterpolationMatrix)->Arg(64)->Arg(256)->Arg(512);

static void BM_ApplyForward(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GeneratorContext ctx(FractionalOrder(1.5), BoundaryPair::parse("DN"), n);
    const GridFunction f = sample(ctx.grid(), [](double x) { return std::exp(-x * x); }, Space::L1);
    for (auto _ : state) benchmark::DoNotOptimize(apply_forward(ctx, f).samples().data());
}
BENCHMARK(BM_ApplyForward)->Arg(64)->Arg(256);

static void BM_Evolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto ctx = std::make_shared<GeneratorContext>(FractionalOrder(1.5), BoundaryPair::parse("NN"), n);
    const GridFunction f = sample(ctx->grid(), [](double) { return 0.5; }, Space::L1);
    for (auto _ : state) benchmark::DoNotOptimize(evolve({Direction::forward, ctx, f, {0.5}}).mass.back());
}
BENCHMARK(BM_Evolve)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_Simulate(benchmark::State& state) {
    const RateMatrix rm(FractionalOrder(1.5), BoundaryPair::parse("DD"), 64);
    const JumpChain chain(rm);
    const auto paths = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(simulate(chain, 32, 0.5, paths, 1).kill_times.data());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_FirstReentry(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(first_reentry_sample(1.5, 100000, 3).overflow);
}
BENCHMARK(BM_FirstReentry)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
