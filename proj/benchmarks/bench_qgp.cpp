#include <benchmark/benchmark.h>

#include <numbers>

#include "qgp/geometric_phase.hpp"
#include "qgp/sweep.hpp"

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void BM_amplitude_analytic(benchmark::State& state) {
    const qgp::SystemParams p{1.0, 0.2, 5.0, std::numbers::pi / 3};
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        if (t > kTwoPi) t = 0.0;
        benchmark::DoNotOptimize(qgp::amplitude_analytic(p, t));
    }
}
BENCHMARK(BM_amplitude_analytic);

void BM_eigen_decompose(benchmark::State& state) {
    const auto rho = qgp::density_matrix(1.1, std::polar(0.8, -0.4));
    for (auto _ : state) benchmark::DoNotOptimize(qgp::eigen_decompose(rho));
}
BENCHMARK(BM_eigen_decompose);

void BM_solve_volterra(benchmark::State& state) {
    const qgp::SystemParams p{1.0, 0.2, 5.0, 0.0};
    const auto kernel = qgp::correlation_kernel(qgp::spectral_density(p));
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(qgp::solve_volterra(kernel, 1.0, kTwoPi, {steps}));
    state.SetComplexityN(steps);
}
BENCHMARK(BM_solve_volterra)->Arg(512)->Arg(2048)->Arg(8192)->Complexity(benchmark::oNSquared);

void BM_gp_exact(benchmark::State& state) {
    const qgp::SystemParams p{1.0, 0.2, 5.0, std::numbers::pi / 3};
    const qgp::QuadratureSettings settings{static_cast<int>(state.range(0)), 1e-8};
    for (auto _ : state) benchmark::DoNotOptimize(qgp::gp_exact(p, settings));
}
BENCHMARK(BM_gp_exact)->Arg(1024)->Arg(4096);

void BM_gp_kinematic(benchmark::State& state) {
    const qgp::SystemParams p{1.0, 0.2, 5.0, std::numbers::pi / 3};
    const int n = 4096;
    std::vector<qgp::QubitDensityMatrix> rho(n + 1);
    for (int i = 0; i <= n; ++i)
        rho[i] = qgp::density_matrix(p.theta0, qgp::amplitude_analytic(p, kTwoPi * i / n));
    for (auto _ : state) benchmark::DoNotOptimize(qgp::gp_kinematic(rho));
}
BENCHMARK(BM_gp_kinematic);

void BM_run_sweep_fig2_coarse(benchmark::State& state) {
    auto spec = qgp::figure_preset("fig2");
    spec.resolution.samples_per_period = 512;
    for (auto _ : state) benchmark::DoNotOptimize(qgp::run_sweep(spec));
}
BENCHMARK(BM_run_sweep_fig2_coarse)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
