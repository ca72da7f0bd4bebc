#include <benchmark/benchmark.h>

#include <string>

#include "imexilw/config.hpp"
#include "imexilw/driver.hpp"

namespace {

using namespace imexilw;

// Full scenario runs over a shortened time interval.
void run_config(benchmark::State& state, const std::string& file, double t_end) {
  ScenarioConfig config = load_config(std::string(IMEXILW_CONFIG_DIR) + "/" + file);
  config.t_end = t_end;
  RunOptions opts;
  opts.write_output = false;
  opts.resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const RunResult r = run_scenario(config, opts);
    state.counters["steps"] = static_cast<double>(r.steps);
  }
}

void BM_Burgers1D(benchmark::State& state) { run_config(state, "ex1_burgers.json", 0.1); }
BENCHMARK(BM_Burgers1D)->Arg(80)->Arg(320)->Unit(benchmark::kMillisecond);

void BM_StiffRelaxation1D(benchmark::State& state) { run_config(state, "ex3_layer_eps1e-10.json", 0.1); }
BENCHMARK(BM_StiffRelaxation1D)->Arg(80)->Arg(320)->Unit(benchmark::kMillisecond);

void BM_DensityWave2D(benchmark::State& state) { run_config(state, "ex4_eta07.json", 0.01); }
BENCHMARK(BM_DensityWave2D)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
