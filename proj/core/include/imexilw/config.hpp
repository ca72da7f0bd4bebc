#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "imexilw/grid.hpp"
#include "imexilw/types.hpp"

namespace imexilw {

struct BoundarySpec {
  std::string kind;       // wall, inflow_state, outflow_copy, periodic, dirichlet, extrapolate
  int component = 0;      // dirichlet: prescribed component
  nlohmann::json state;   // inflow_state: state description
};

struct ScenarioConfig {
  std::string name = "scenario";
  int dimension = 1;
  std::string model = "burgers_source";
  nlohmann::json model_parameters = nlohmann::json::object();
  std::string tableau = "ars443";
  std::optional<Splitting> splitting;
  double extrapolation_epsilon = 1e-6;
  std::string extrapolation_weights = "nonlinear";  // or "linear"
  double cfl = 0.8;
  double t_end = 1.0;
  int max_steps = 0;
  std::vector<double> domain{0.0, 1.0};
  std::vector<Rect> obstacles;
  double eta_left = 0.5;
  double eta_right = 0.5;
  double eta_x = 0.5;
  double eta_y = 0.5;
  std::vector<int> refinements{20};
  nlohmann::json initial = nlohmann::json{{"type", "exact"}};
  std::string exact;
  std::map<std::string, BoundarySpec> boundaries;
  BoundarySpec obstacle_boundary{"wall", 0, {}};
  int norm_component = 0;
  int exclude_left = 0;
  int exclude_right = 0;
  std::string output_directory = "output";
  bool write_fields = true;
  std::vector<double> snapshots;
  bool verbose = false;
};

ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);
nlohmann::json to_json(const ScenarioConfig& c);

Splitting parse_splitting(const std::string& s);
std::string to_string(Splitting s);

// Applies the output-directory override from the environment, if set.
inline constexpr const char* kOutputDirEnv = "IMEXILW_OUTPUT_DIR";
std::string resolve_output_directory(const ScenarioConfig& c);

}  // namespace imexilw
