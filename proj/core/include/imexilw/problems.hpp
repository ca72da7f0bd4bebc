#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "imexilw/boundary2d.hpp"
#include "imexilw/config.hpp"
#include "imexilw/grid.hpp"
#include "imexilw/model.hpp"
#include "imexilw/relation.hpp"

namespace imexilw {

// Exact solution U(t, x, y) with its time derivative.
struct ExactSolution {
  std::string name;
  std::function<State(double, double, double)> value;
  std::function<State(double, double, double)> time_derivative;
};

ModelPtr make_model(const std::string& name, const nlohmann::json& parameters);
std::vector<std::string> model_names();

ExactSolution make_exact_solution(const std::string& name, const Model& model, const nlohmann::json& parameters);
std::vector<std::string> exact_solution_names();

// A state given as an array of conserved components or, for the reactive Euler model,
// as an object with rho, u, v, Y and one of p or E.
State parse_state(const Model& model, const nlohmann::json& j);

std::function<State(double)> initial_condition_1d(const ScenarioConfig& c, const Model& model,
                                                  const ExactSolution* exact);
std::function<State(double, double)> initial_condition_2d(const ScenarioConfig& c, const Model& model,
                                                          const ExactSolution* exact);

// Relation at one end of a 1D domain. side is "left" or "right".
BoundaryRelation boundary_relation_1d(const ScenarioConfig& c, const std::string& side, const Model& model,
                                      const Grid1D& grid, const ExactSolution* exact);

// One condition per grid face: domain edges by side name, obstacle faces from the
// obstacle entry.
std::vector<FaceCondition> face_conditions(const ScenarioConfig& c, const Grid2D& grid, const Model& model);

Grid1D make_grid_1d(const ScenarioConfig& c, int resolution);
Grid2D make_grid_2d(const ScenarioConfig& c, int resolution);

}  // namespace imexilw
