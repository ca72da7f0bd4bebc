#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "imexilw/config.hpp"
#include "imexilw/norms.hpp"

namespace imexilw {

struct RunOptions {
  bool write_output = true;
  std::optional<int> resolution;  // defaults to the finest refinement
  std::ostream* log = nullptr;
};

struct RunResult {
  std::string name;
  int resolution = 0;
  double dx = 0.0;
  std::size_t nodes = 0;
  int steps = 0;
  double time = 0.0;
  bool reached_end = false;
  double wall_seconds = 0.0;
  std::optional<ErrorNorms> errors;
  double max_abs = 0.0;  // largest |U| component at the final time
  bool finite = true;
  // Reactive Euler only: minima over all nodes and all time levels.
  std::optional<double> min_density;
  std::optional<double> min_pressure;
  std::vector<std::string> files;
  nlohmann::json manifest;
};

RunResult run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

// Runs every refinement and, when output is enabled, writes convergence.csv and
// convergence.txt next to the per-run manifests.
ConvergenceReport convergence_study(const ScenarioConfig& config, const RunOptions& options = {},
                                    std::vector<RunResult>* runs = nullptr);

}  // namespace imexilw
