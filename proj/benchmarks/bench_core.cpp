#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "effvel/caloric.hpp"
#include "effvel/heat.hpp"
#include "effvel/operators.hpp"
#include "effvel/solver.hpp"

using namespace effvel;

namespace {

constexpr double kPi = std::numbers::pi;

ScalarField smooth_field(const Grid& g) {
    return ScalarField::from_function(
        g, [](double x) { return 1.0 + 0.3 * std::sin(x) + 0.1 * std::cos(3 * x); });
}

void bench_heat_periodic(benchmark::State& state) {
    const Grid g = Grid::line(0.0, 2 * kPi, state.range(0), BoundaryKind::periodic);
    const ScalarField f = smooth_field(g);
    for (auto _ : state) benchmark::DoNotOptimize(heat_semigroup(f, 0.1, 1.0));
}
BENCHMARK(bench_heat_periodic)->Arg(256)->Arg(1024)->Arg(4096);

void bench_heat_radial(benchmark::State& state) {
    const Grid g = Grid::radial(8.0, state.range(0), 2);
    const ScalarField f =
        ScalarField::from_function(g, [](double r) { return 1.0 + std::exp(-r * r); });
    for (auto _ : state) benchmark::DoNotOptimize(heat_semigroup(f, 0.05, 1.0, 1.0));
}
BENCHMARK(bench_heat_radial)->Arg(128)->Arg(512);

void bench_step_density(benchmark::State& state) {
    const Grid g = Grid::line(0.0, 2 * kPi, state.range(0), BoundaryKind::periodic);
    const ScalarField rho = smooth_field(g);
    const ScalarField v =
        ScalarField::from_function(g, [](double x) { return 0.2 * std::cos(x); });
    for (auto _ : state)
        benchmark::DoNotOptimize(step_density(rho, v, 1e-3, 0.5, 0.5));
}
BENCHMARK(bench_step_density)->Arg(1024)->Arg(4096);

void bench_solve_augmented(benchmark::State& state) {
    const Grid g = Grid::line(0.0, 2 * kPi, state.range(0), BoundaryKind::periodic);
    const ScalarField rho0 = smooth_field(g);
    const ScalarField v0 =
        ScalarField::from_function(g, [](double x) { return 0.1 * std::cos(x); });
    const AugmentedState init = make_state(0.0, rho0, v0, 0.5);
    SolverConfig cfg;
    cfg.final_time = 0.05;
    cfg.sample_stride = 1000;
    const PressureLaw law(1.0, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_augmented(init, law, cfg));
}
BENCHMARK(bench_solve_augmented)->Arg(512)->Arg(2048);

void bench_bmo_inv(benchmark::State& state) {
    const Grid g = Grid::line(0.0, 2 * kPi, state.range(0), BoundaryKind::periodic);
    const ScalarField m0 =
        ScalarField::from_function(g, [](double x) { return std::sin(x); });
    CaloricConfig cfg;
    cfg.ladder_rungs = 10;
    cfg.s_substeps = 8;
    for (auto _ : state) benchmark::DoNotOptimize(bmo_inv_norm(m0, cfg));
}
BENCHMARK(bench_bmo_inv)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
