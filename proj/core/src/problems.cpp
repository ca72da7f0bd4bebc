#include "imexilw/problems.hpp"

#include <cmath>
#include <numbers>

#include "imexilw/error.hpp"

namespace imexilw {

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

double param(const nlohmann::json& p, const char* key, double fallback) {
  if (!p.is_object() || !p.contains(key)) return fallback;
  if (!p.at(key).is_number()) config_error(std::string("model parameter '") + key + "' must be a number");
  return p.at(key).get<double>();
}

State scalar(double v) {
  State s(1);
  s(0) = v;
  return s;
}

State pair(double a, double b) {
  State s(2);
  s << a, b;
  return s;
}

const ReactiveEuler& as_euler(const Model& model, const std::string& what) {
  const auto* e = dynamic_cast<const ReactiveEuler*>(&model);
  if (e == nullptr) config_error(what + " requires the reactive_euler model");
  return *e;
}

void require_components(const Model& model, int m, const std::string& what) {
  if (model.components() != m) {
    config_error(what + " needs a model with " + std::to_string(m) + " components, got " + model.name());
  }
}

State state_entry(const Model& model, const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) config_error(std::string("initial condition needs '") + key + "'");
  return parse_state(model, j.at(key));
}

}  // namespace

ModelPtr make_model(const std::string& name, const nlohmann::json& p) {
  if (name == "burgers_source") return scalar_burgers_source();
  if (name == "linear_relax") return linear_relaxation(param(p, "epsilon", 1.0));
  if (name == "nonlinear_relax") return nonlinear_relaxation(param(p, "epsilon", 1.0));
  if (name == "linear_advection") return linear_advection(param(p, "speed", 1.0));
  if (name == "reactive_euler") {
    EulerParameters e;
    e.gamma = param(p, "gamma", e.gamma);
    e.q = param(p, "q", e.q);
    e.t_act = param(p, "T_act", e.t_act);
    e.k_rate = param(p, "K_rate", e.k_rate);
    if (!(e.gamma > 1.0)) config_error("gamma must exceed 1");
    return reactive_euler(e);
  }
  config_error("unknown model '" + name + "'");
}

std::vector<std::string> model_names() {
  return {"burgers_source", "linear_relax", "nonlinear_relax", "linear_advection", "reactive_euler"};
}

ExactSolution make_exact_solution(const std::string& name, const Model& model, const nlohmann::json& p) {
  ExactSolution s;
  s.name = name;
  if (name == "exp_t_plus_x") {
    require_components(model, 1, name);
    s.value = [](double t, double x, double) { return scalar(std::exp(t + x)); };
    s.time_derivative = s.value;
    return s;
  }
  if (name == "relax_smooth") {
    require_components(model, 2, name);
    s.value = [](double t, double x, double) { return pair(std::exp(t + x), -std::exp(t + x)); };
    s.time_derivative = s.value;
    return s;
  }
  if (name == "relax_layer") {
    require_components(model, 2, name);
    const double eps = param(p, "epsilon", 1.0);
    if (!(eps > 0.0)) throw Error(ErrorCode::NonpositiveEpsilon, "relax_layer needs epsilon > 0");
    s.value = [eps](double t, double x, double) {
      return pair(std::exp(t + x) + std::exp(-x / eps), -std::exp(t + x));
    };
    s.time_derivative = [](double t, double x, double) { return pair(std::exp(t + x), -std::exp(t + x)); };
    return s;
  }
  if (name == "density_wave") {
    const ReactiveEuler& euler = as_euler(model, name);
    constexpr double k = 2.0 * std::numbers::pi;
    s.value = [&euler](double t, double x, double y) {
      return euler.conserved({1.0 + 0.3 * std::sin(k * (x + y - t)), 1.0, 0.0, 1.0, 0.0});
    };
    s.time_derivative = [](double t, double x, double y) {
      const double drho = -0.3 * k * std::cos(k * (x + y - t));
      State d(5);
      d << drho, drho, 0.0, 0.5 * drho, 0.0;
      return d;
    };
    return s;
  }
  config_error("unknown exact solution '" + name + "'");
}

std::vector<std::string> exact_solution_names() {
  return {"exp_t_plus_x", "relax_smooth", "relax_layer", "density_wave"};
}

State parse_state(const Model& model, const nlohmann::json& j) {
  const int m = model.components();
  if (j.is_array()) {
    const auto v = j.get<std::vector<double>>();
    if (static_cast<int>(v.size()) != m) {
      config_error("state needs " + std::to_string(m) + " components, got " + std::to_string(v.size()));
    }
    State s(m);
    for (int c = 0; c < m; ++c) s(c) = v[static_cast<std::size_t>(c)];
    return s;
  }
  if (j.is_number() && m == 1) return scalar(j.get<double>());
  if (!j.is_object()) config_error("state must be an array of conserved values or an object of primitives");
  const ReactiveEuler& euler = as_euler(model, "a primitive state");
  Primitive w;
  w.rho = j.value("rho", w.rho);
  w.u = j.value("u", w.u);
  w.v = j.value("v", w.v);
  w.Y = j.value("Y", w.Y);
  const bool has_p = j.contains("p");
  const bool has_e = j.contains("E");
  if (has_p == has_e) config_error("primitive state needs exactly one of 'p' and 'E'");
  if (has_p) {
    w.p = j.at("p").get<double>();
  } else {
    // E = p/(gamma-1) + rho (u^2+v^2)/2 + q rho Y
    const auto& par = euler.parameters();
    const double kinetic = 0.5 * w.rho * (w.u * w.u + w.v * w.v);
    w.p = (par.gamma - 1.0) * (j.at("E").get<double>() - kinetic - par.q * w.rho * w.Y);
  }
  const State u = euler.conserved(w);
  euler.check_admissible(u);
  return u;
}

std::function<State(double)> initial_condition_1d(const ScenarioConfig& c, const Model& model,
                                                  const ExactSolution* exact) {
  const std::string type = c.initial.value("type", std::string("exact"));
  if (type == "exact") {
    if (exact == nullptr) config_error("initial type 'exact' needs an exact solution");
    auto f = exact->value;
    return [f](double x) { return f(0.0, x, 0.0); };
  }
  if (type == "uniform") {
    const State s = state_entry(model, c.initial, "state");
    return [s](double) { return s; };
  }
  if (type == "half_plane") {
    const double pos = c.initial.value("position", 0.0);
    const State lo = state_entry(model, c.initial, "below");
    const State hi = state_entry(model, c.initial, "above");
    return [=](double x) { return x < pos ? lo : hi; };
  }
  config_error("unknown 1D initial condition '" + type + "'");
}

std::function<State(double, double)> initial_condition_2d(const ScenarioConfig& c, const Model& model,
                                                          const ExactSolution* exact) {
  const std::string type = c.initial.value("type", std::string("exact"));
  if (type == "exact") {
    if (exact == nullptr) config_error("initial type 'exact' needs an exact solution");
    auto f = exact->value;
    return [f](double x, double y) { return f(0.0, x, y); };
  }
  if (type == "uniform") {
    const State s = state_entry(model, c.initial, "state");
    return [s](double, double) { return s; };
  }
  if (type == "circle") {
    const auto center = c.initial.value("center", std::vector<double>{0.0, 0.0});
    if (center.size() != 2) config_error("circle center needs two coordinates");
    const double r = c.initial.value("radius", 0.0);
    const State in = state_entry(model, c.initial, "inside");
    const State out = state_entry(model, c.initial, "outside");
    const double cx = center[0];
    const double cy = center[1];
    return [=](double x, double y) {
      return (x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r ? in : out;
    };
  }
  if (type == "half_plane") {
    const std::string axis = c.initial.value("axis", std::string("x"));
    if (axis != "x" && axis != "y") config_error("half_plane axis must be 'x' or 'y'");
    const bool along_x = axis == "x";
    const double pos = c.initial.value("position", 0.0);
    const State lo = state_entry(model, c.initial, "below");
    const State hi = state_entry(model, c.initial, "above");
    return [=](double x, double y) { return (along_x ? x : y) < pos ? lo : hi; };
  }
  config_error("unknown 2D initial condition '" + type + "'");
}

BoundaryRelation boundary_relation_1d(const ScenarioConfig& c, const std::string& side, const Model& model,
                                      const Grid1D& grid, const ExactSolution* exact) {
  const auto it = c.boundaries.find(side);
  if (it == c.boundaries.end()) config_error("missing boundary '" + side + "'");
  const BoundarySpec& b = it->second;
  const int m = model.components();
  if (b.kind == "extrapolate") return extrapolation_relation();
  if (b.kind == "periodic") return periodic_relation();
  if (b.kind == "outflow_copy") return outflow_copy_relation();
  if (b.kind == "wall") return wall_relation(m);
  if (b.kind == "inflow_state") {
    const double cos_t = side == "left" ? -1.0 : 1.0;
    return prescribed_state_relation(model.rotate(parse_state(model, b.state), cos_t, 0.0));
  }
  if (b.kind == "dirichlet") {
    if (exact == nullptr) config_error("dirichlet boundary '" + side + "' needs an exact solution");
    if (b.component < 0 || b.component >= m) config_error("dirichlet component out of range");
    const double xb = side == "left" ? grid.a : grid.b;
    const int k = b.component;
    auto f = exact->value;
    auto df = exact->time_derivative;
    return prescribe_component(
        k, m, [f, xb, k](double t) { return f(t, xb, 0.0)(k); }, [df, xb, k](double t) { return df(t, xb, 0.0)(k); });
  }
  config_error("boundary kind '" + b.kind + "' is not available in 1D");
}

std::vector<FaceCondition> face_conditions(const ScenarioConfig& c, const Grid2D& grid, const Model& model) {
  const int m = model.components();
  auto build = [&](const BoundarySpec& b, const std::string& where) -> FaceCondition {
    if (b.kind == "wall") return wall_condition(m);
    if (b.kind == "inflow_state") return inflow_state_condition(parse_state(model, b.state));
    if (b.kind == "outflow_copy") return outflow_copy_condition();
    if (b.kind == "periodic") return periodic_condition();
    if (b.kind == "extrapolate") return characteristic_condition(extrapolation_relation());
    config_error("boundary kind '" + b.kind + "' is not available on 2D face '" + where + "'");
  };
  auto edge_name = [](Edge e) {
    switch (e) {
      case Edge::XLow: return "left";
      case Edge::XHigh: return "right";
      case Edge::YLow: return "bottom";
      case Edge::YHigh: return "top";
    }
    return "left";
  };
  std::vector<FaceCondition> out;
  out.reserve(grid.faces().size());
  for (const Face& f : grid.faces()) {
    if (f.owner >= 0) {
      if (c.obstacle_boundary.kind == "periodic") config_error("obstacle faces cannot be periodic");
      out.push_back(build(c.obstacle_boundary, "obstacles"));
      continue;
    }
    const std::string side = edge_name(f.edge);
    const auto it = c.boundaries.find(side);
    if (it == c.boundaries.end()) config_error("missing boundary '" + side + "'");
    out.push_back(build(it->second, side));
  }
  return out;
}

Grid1D make_grid_1d(const ScenarioConfig& c, int resolution) {
  const double a = c.domain[0];
  const double b = c.domain[1];
  if (!(b > a)) config_error("domain must satisfy b > a");
  const double target = 1.0 / resolution;
  const double nodes = (b - a) / target - c.eta_left - c.eta_right + 1.0;
  const int n = static_cast<int>(std::lround(nodes));
  if (n <= 0) config_error("geometry has no interior nodes");
  if (std::abs(nodes - n) > 1e-9) {
    throw Error(ErrorCode::InvalidSpacing, "resolution " + std::to_string(resolution) +
                                               " does not fit the domain with the given offsets");
  }
  return build_grid_1d(a, b, n, c.eta_left, c.eta_right);
}

Grid2D make_grid_2d(const ScenarioConfig& c, int resolution) {
  const Rect domain{c.domain[0], c.domain[1], c.domain[2], c.domain[3]};
  if (!(domain.x1 > domain.x0) || !(domain.y1 > domain.y0)) config_error("domain must have positive extent");
  Grid2D g = build_grid_2d(domain, c.obstacles, 1.0 / resolution, c.eta_x, c.eta_y);
  if (g.interior_count() == 0) config_error("geometry has no interior nodes");
  return g;
}

}  // namespace imexilw
