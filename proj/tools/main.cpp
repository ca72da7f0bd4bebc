#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "imexilw/config.hpp"
#include "imexilw/driver.hpp"
#include "imexilw/error.hpp"
#include "imexilw/problems.hpp"
#include "imexilw/verification.hpp"

namespace {

using namespace imexilw;

constexpr int kExitOther = 1;

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Config: return 2;
    case ErrorCategory::Geometry: return 3;
    case ErrorCategory::Numerical: return 4;
    case ErrorCategory::Io: return 5;
  }
  return kExitOther;
}

void print_run(const RunResult& r) {
  std::printf("%s: dx = 1/%d, %zu nodes, %d steps, t = %.6g, %.2f s\n", r.name.c_str(), r.resolution, r.nodes,
              r.steps, r.time, r.wall_seconds);
  if (r.errors) std::printf("  errors: L1 %.3e  L2 %.3e  Linf %.3e\n", r.errors->l1, r.errors->l2, r.errors->linf);
  if (r.min_density) std::printf("  min density %.6g, min pressure %.6g\n", *r.min_density, *r.min_pressure);
  if (!r.reached_end) std::printf("  stopped before t_end (step limit)\n");
  for (const auto& f : r.files) std::printf("  wrote %s\n", f.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IMEX Runge-Kutta WENO solver with inverse Lax-Wendroff boundaries"};
  app.require_subcommand(1);

  std::string config_path;
  int resolution = 0;
  bool no_output = false;

  auto* run = app.add_subcommand("run", "Run one scenario at its finest (or a given) resolution");
  run->add_option("--config", config_path, "Scenario JSON file")->required();
  run->add_option("--resolution", resolution, "Run at dx = 1/N instead of the finest refinement");
  run->add_flag("--no-output", no_output, "Skip CSV and manifest files");

  auto* conv = app.add_subcommand("convergence", "Run every refinement and report observed orders");
  conv->add_option("--config", config_path, "Scenario JSON file")->required();
  conv->add_flag("--no-output", no_output, "Skip CSV and manifest files");

  auto* list = app.add_subcommand("list-models", "List models, exact solutions and tableaux");
  auto* oracle = app.add_subcommand("verify-oracle", "Compare stage boundary values with closed forms");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      std::cout << "models:";
      for (const auto& m : model_names()) std::cout << ' ' << m;
      std::cout << "\nexact solutions:";
      for (const auto& e : exact_solution_names()) std::cout << ' ' << e;
      std::cout << "\ntableaux: ars443 ssprk3\n";
      return 0;
    }
    if (*oracle) {
      const auto rows = oracle_study();
      std::cout << format_oracle_study(rows);
      return 0;
    }
    const ScenarioConfig cfg = load_config(config_path);
    RunOptions opts;
    opts.write_output = !no_output;
    opts.log = &std::cerr;
    if (*run) {
      if (resolution > 0) opts.resolution = resolution;
      print_run(run_scenario(cfg, opts));
      return 0;
    }
    if (*conv) {
      std::cout << format_report(convergence_study(cfg, opts));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitOther;
}
