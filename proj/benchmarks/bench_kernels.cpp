#include "chiralq/bessel.hpp"
#include "chiralq/diffops.hpp"
#include "chiralq/fundamental.hpp"
#include "chiralq/presets.hpp"
#include "chiralq/solver.hpp"

#include <benchmark/benchmark.h>

using namespace chiralq;

static void BM_BesselPair(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_j01(z));
    }
}
BENCHMARK(BM_BesselPair)->Arg(3)->Arg(15)->Arg(60);

static void BM_FundamentalF(benchmark::State& state) {
    const MediumParams p(1.0, 1.0, 0.5);
    const Vec3 x{0.3, -0.2, 0.4};
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fundamental_f(t, x, p));
        t = t > 2.0 ? 0.1 : t + 1e-3;
    }
}
BENCHMARK(BM_FundamentalF);

static void BM_ApplyM(benchmark::State& state) {
    const MediumParams p(1.0, 1.0, 0.5);
    const auto n = static_cast<std::size_t>(state.range(0));
    SpacetimeGrid g;
    g.dt = 0.05;
    g.dx = {0.05, 0.05, 0.05};
    g.n = {n, n, n, n};
    const auto f = sample(g, [](double t, const Vec3& x) {
        return Biquaternion(0.0, std::sin(x.x2 + t), std::cos(x.x3 - t), x.x1 * t);
    });
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_M(f, p).values.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.size()));
}
BENCHMARK(BM_ApplyM)->Arg(12)->Arg(20);

static void BM_Convolve(benchmark::State& state) {
    const MediumParams p(1.0, 1.0, 0.5);
    const SourceBox box{0.2, 2.2, {-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}};
    const auto plan = make_aligned_plan(box, 0.15, 0.2, 1.5, {0.1, 0.0, 0.0}, 1);
    const auto q = assemble_rhs(gaussian_pulse({}), plan.cells, p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve_rhs(q, p, plan).values.data());
    }
}
BENCHMARK(BM_Convolve)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
