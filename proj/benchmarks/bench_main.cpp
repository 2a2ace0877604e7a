#include <benchmark/benchmark.h>

#include <cmath>

#include "rydcav/continuum.hpp"
#include "rydcav/montecarlo.hpp"
#include "rydcav/pairham.hpp"
#include "rydcav/potential.hpp"
#include "rydcav/ramsey.hpp"
#include "rydcav/specfun.hpp"

using namespace rydcav;

namespace {

const auto fig4d = PotentialCoefficients::direct(1.0, 2.5, 10.0);

void BM_FresnelS(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::fresnel_s(x));
    x = x < 20.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_FresnelS);

void BM_SinIntegralModInf(benchmark::State& state) {
  const double beta = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(specfun::sin_integral_mod(beta, INFINITY));
}
BENCHMARK(BM_SinIntegralModInf)->Arg(1)->Arg(100)->Arg(10000);

void BM_GammaContinuum(benchmark::State& state) {
  const auto method = state.range(0) ? ramsey::ContinuumMethod::quadrature : ramsey::ContinuumMethod::closed_form;
  const auto cp = ramsey::ContinuumParams::from_coefficients(fig4d, 8.8, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(ramsey::gamma_continuum(6.3, cp, method));
}
BENCHMARK(BM_GammaContinuum)->Arg(0)->Arg(1);

void BM_PerturbationOrder4(benchmark::State& state) {
  const PairLevels levels{3.0, -7.0, 0.0};
  const PairCouplings c{0.11, 0.07, 0.2, 0.13, 0.17, 0.09};
  const auto h = build_full(levels, c);
  for (auto _ : state) benchmark::DoNotOptimize(rs_perturbation_order4(h));
}
BENCHMARK(BM_PerturbationOrder4);

void BM_MonteCarloRealization(benchmark::State& state) {
  ramsey::RamseyConfig cfg;
  cfg.N = static_cast<int>(state.range(0));
  cfg.realizations = 1;
  cfg.threads = 1;
  cfg.geometry = ramsey::Geometry::ensemble;
  for (int i = 0; i < 181; ++i) cfg.tau_grid.push_back(6 * 3.141592653589793 * i / 180);
  for (auto _ : state) benchmark::DoNotOptimize(ramsey::monte_carlo_contrast(cfg, fig4d));
}
BENCHMARK(BM_MonteCarloRealization)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
