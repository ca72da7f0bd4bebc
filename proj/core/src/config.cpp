#include "imexilw/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "imexilw/error.hpp"

namespace imexilw {

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

template <typename T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    config_error(std::string("invalid value for '") + key + "': " + e.what());
  }
}

BoundarySpec parse_boundary(const nlohmann::json& j, const std::string& where) {
  static const std::set<std::string> kinds = {"wall",     "inflow_state", "outflow_copy",
                                              "periodic", "dirichlet",    "extrapolate"};
  BoundarySpec b;
  if (j.is_string()) {
    b.kind = j.get<std::string>();
  } else if (j.is_object()) {
    b.kind = get_or<std::string>(j, "kind", "");
    b.component = get_or<int>(j, "component", 0);
    if (j.contains("state")) b.state = j.at("state");
  } else {
    config_error("boundary '" + where + "' must be a string or an object");
  }
  if (!kinds.count(b.kind)) config_error("boundary '" + where + "' has unknown kind '" + b.kind + "'");
  if (b.kind == "inflow_state" && b.state.is_null()) config_error("boundary '" + where + "' needs a state");
  return b;
}

nlohmann::json boundary_json(const BoundarySpec& b) {
  nlohmann::json j{{"kind", b.kind}};
  if (b.kind == "dirichlet") j["component"] = b.component;
  if (!b.state.is_null()) j["state"] = b.state;
  return j;
}

}  // namespace

Splitting parse_splitting(const std::string& s) {
  if (s == "componentwise") return Splitting::Componentwise;
  if (s == "characteristic") return Splitting::Characteristic;
  config_error("unknown splitting '" + s + "'");
}

std::string to_string(Splitting s) {
  return s == Splitting::Componentwise ? "componentwise" : "characteristic";
}

ScenarioConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) config_error("configuration must be a JSON object");
  ScenarioConfig c;
  c.name = get_or<std::string>(j, "name", c.name);
  c.dimension = get_or<int>(j, "dimension", c.dimension);
  if (c.dimension != 1 && c.dimension != 2) config_error("dimension must be 1 or 2");

  if (j.contains("model")) {
    const auto& m = j.at("model");
    if (m.is_string()) {
      c.model = m.get<std::string>();
    } else if (m.is_object()) {
      c.model = get_or<std::string>(m, "name", c.model);
      c.model_parameters = m;
      c.model_parameters.erase("name");
    } else {
      config_error("'model' must be a string or an object");
    }
  }
  c.tableau = get_or<std::string>(j, "tableau", c.tableau);
  if (j.contains("splitting")) c.splitting = parse_splitting(j.at("splitting").get<std::string>());
  if (j.contains("extrapolation")) {
    c.extrapolation_epsilon = get_or<double>(j.at("extrapolation"), "epsilon", c.extrapolation_epsilon);
    c.extrapolation_weights = get_or<std::string>(j.at("extrapolation"), "weights", c.extrapolation_weights);
    if (c.extrapolation_weights != "nonlinear" && c.extrapolation_weights != "linear") {
      config_error("extrapolation weights must be 'nonlinear' or 'linear'");
    }
    if (!(c.extrapolation_epsilon > 0.0)) config_error("extrapolation epsilon must be positive");
  }
  c.cfl = get_or<double>(j, "cfl", c.cfl);
  c.t_end = get_or<double>(j, "t_end", c.t_end);
  c.max_steps = get_or<int>(j, "max_steps", c.max_steps);
  if (!(c.cfl > 0.0)) config_error("cfl must be positive");
  if (!(c.t_end >= 0.0)) config_error("t_end must be nonnegative");

  c.domain = get_or<std::vector<double>>(j, "domain", c.dimension == 1 ? std::vector<double>{0.0, 1.0}
                                                                         : std::vector<double>{0.0, 1.0, 0.0, 1.0});
  if (c.domain.size() != static_cast<std::size_t>(2 * c.dimension)) {
    config_error("domain needs " + std::to_string(2 * c.dimension) + " numbers");
  }
  if (j.contains("obstacles")) {
    for (const auto& o : j.at("obstacles")) {
      const auto v = o.get<std::vector<double>>();
      if (v.size() != 4) config_error("obstacles are given as [x0, x1, y0, y1]");
      c.obstacles.push_back({v[0], v[1], v[2], v[3]});
    }
  }
  if (j.contains("eta")) {
    const auto& e = j.at("eta");
    if (e.is_number()) {
      const double v = e.get<double>();
      c.eta_left = c.eta_right = c.eta_x = c.eta_y = v;
    } else {
      c.eta_left = get_or<double>(e, "left", c.eta_left);
      c.eta_right = get_or<double>(e, "right", c.eta_right);
      c.eta_x = get_or<double>(e, "x", c.eta_x);
      c.eta_y = get_or<double>(e, "y", c.eta_y);
    }
  }
  if (j.contains("refinements")) {
    c.refinements = j.at("refinements").get<std::vector<int>>();
  } else if (j.contains("resolution")) {
    c.refinements = {j.at("resolution").get<int>()};
  }
  if (c.refinements.empty()) config_error("at least one resolution is required");
  for (std::size_t k = 0; k < c.refinements.size(); ++k) {
    if (c.refinements[k] <= 0) config_error("resolutions must be positive");
    if (k > 0 && c.refinements[k] <= c.refinements[k - 1]) config_error("refinements must increase strictly");
  }
  if (j.contains("initial")) c.initial = j.at("initial");
  c.exact = get_or<std::string>(j, "exact", c.exact);
  if (j.contains("boundaries")) {
    for (const auto& [side, b] : j.at("boundaries").items()) {
      if (side == "obstacles") {
        c.obstacle_boundary = parse_boundary(b, side);
      } else {
        c.boundaries[side] = parse_boundary(b, side);
      }
    }
  }
  if (j.contains("norms")) {
    const auto& n = j.at("norms");
    c.norm_component = get_or<int>(n, "component", c.norm_component);
    if (n.contains("exclude")) {
      c.exclude_left = get_or<int>(n.at("exclude"), "left", 0);
      c.exclude_right = get_or<int>(n.at("exclude"), "right", 0);
    }
  }
  if (j.contains("output")) {
    const auto& o = j.at("output");
    c.output_directory = get_or<std::string>(o, "directory", c.output_directory);
    c.write_fields = get_or<bool>(o, "fields", c.write_fields);
    c.snapshots = get_or<std::vector<double>>(o, "snapshots", c.snapshots);
  }
  c.verbose = get_or<bool>(j, "verbose", c.verbose);
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open configuration file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    config_error("cannot parse '" + path + "': " + e.what());
  }
  return parse_config(j);
}

nlohmann::json to_json(const ScenarioConfig& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["dimension"] = c.dimension;
  nlohmann::json model = c.model_parameters;
  model["name"] = c.model;
  j["model"] = model;
  j["tableau"] = c.tableau;
  if (c.splitting) j["splitting"] = to_string(*c.splitting);
  j["extrapolation"] = {{"epsilon", c.extrapolation_epsilon}, {"weights", c.extrapolation_weights}};
  j["cfl"] = c.cfl;
  j["t_end"] = c.t_end;
  j["max_steps"] = c.max_steps;
  j["domain"] = c.domain;
  nlohmann::json obstacles = nlohmann::json::array();
  for (const auto& r : c.obstacles) obstacles.push_back({r.x0, r.x1, r.y0, r.y1});
  j["obstacles"] = obstacles;
  if (c.dimension == 1) {
    j["eta"] = {{"left", c.eta_left}, {"right", c.eta_right}};
  } else {
    j["eta"] = {{"x", c.eta_x}, {"y", c.eta_y}};
  }
  j["refinements"] = c.refinements;
  j["initial"] = c.initial;
  j["exact"] = c.exact;
  nlohmann::json b = nlohmann::json::object();
  for (const auto& [side, spec] : c.boundaries) b[side] = boundary_json(spec);
  if (c.dimension == 2) b["obstacles"] = boundary_json(c.obstacle_boundary);
  j["boundaries"] = b;
  j["norms"] = {{"component", c.norm_component}, {"exclude", {{"left", c.exclude_left}, {"right", c.exclude_right}}}};
  j["output"] = {{"directory", c.output_directory}, {"fields", c.write_fields}, {"snapshots", c.snapshots}};
  j["verbose"] = c.verbose;
  return j;
}

std::string resolve_output_directory(const ScenarioConfig& c) {
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
  return c.output_directory;
}

}  // namespace imexilw
