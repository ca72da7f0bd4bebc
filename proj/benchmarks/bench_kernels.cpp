#include <benchmark/benchmark.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "imexilw/discretization.hpp"
#include "imexilw/extrapolation.hpp"
#include "imexilw/model.hpp"

namespace {

using namespace imexilw;

void BM_Weno3Interface(benchmark::State& state) {
  double a = 0.1, b = 0.4, c = 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(weno3_interface_value(a, b, c));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_Weno3Interface);

void BM_WenoExtrapolate(benchmark::State& state) {
  const std::array<double, 3> v{1.0, 1.1, 1.3};
  const ExtrapolationStencil st{0.0, 0.1, -0.15};
  ExtrapolationOptions opts;
  opts.weights = state.range(0) ? ExtrapolationWeights::Linear : ExtrapolationWeights::Nonlinear;
  for (auto _ : state) benchmark::DoNotOptimize(weno_extrapolate(v, st, opts));
}
BENCHMARK(BM_WenoExtrapolate)->Arg(0)->Arg(1);

void BM_EulerEigensystem(benchmark::State& state) {
  auto euler = reactive_euler();
  const State u = euler->conserved({1.0, 0.5, -0.2, 2.0, 0.3});
  for (auto _ : state) benchmark::DoNotOptimize(euler->eigensystem(u, kXDirection));
}
BENCHMARK(BM_EulerEigensystem);

void BM_EulerImplicitSolve(benchmark::State& state) {
  auto euler = reactive_euler();
  const State u = euler->conserved({1.0, 0.5, -0.2, 2.0, 0.8});
  for (auto _ : state) benchmark::DoNotOptimize(euler->solve_implicit(u, 0.01));
}
BENCHMARK(BM_EulerImplicitSolve);

void BM_LineDivergence(benchmark::State& state) {
  auto euler = reactive_euler();
  const int n = static_cast<int>(state.range(0));
  const double dx = 1.0 / n;
  std::vector<State> line(n + 4);
  for (int k = 0; k < n + 4; ++k) {
    const double x = (k - 2) * dx;
    line[k] = euler->conserved({1.0 + 0.2 * std::sin(2.0 * std::numbers::pi * x), 0.5, 0.0, 1.0, 0.5});
  }
  std::vector<State> out(n);
  DiscretizationOptions opts;
  opts.splitting = state.range(1) ? Splitting::Characteristic : Splitting::Componentwise;
  for (auto _ : state) {
    line_divergence(line.data(), n + 4, *euler, kXDirection, 2.0, dx, opts, out.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_LineDivergence)->Args({256, 0})->Args({256, 1});

}  // namespace
