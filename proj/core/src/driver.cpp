#include "imexilw/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <ostream>
#include <sstream>

#include "imexilw/error.hpp"
#include "imexilw/output.hpp"
#include "imexilw/problems.hpp"
#include "imexilw/stepper.hpp"
#include "imexilw/tableau.hpp"

namespace imexilw {

namespace {

struct Positivity {
  const ReactiveEuler* euler = nullptr;
  double rho = std::numeric_limits<double>::infinity();
  double p = std::numeric_limits<double>::infinity();

  void observe(const State& u) {
    if (euler == nullptr) return;
    rho = std::min(rho, u(0));
    p = std::min(p, euler->pressure(u));
  }
};

std::string time_tag(double t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

nlohmann::json norms_json(const ErrorNorms& n) { return {{"l1", n.l1}, {"l2", n.l2}, {"linf", n.linf}}; }

class Runner {
 public:
  Runner(const ScenarioConfig& c, const RunOptions& o, int resolution)
      : c_(c), o_(o), resolution_(resolution), model_(make_model(c.model, c.model_parameters)),
        tableau_(tableau_by_name(c.tableau)) {
    if (!c.exact.empty()) exact_ = make_exact_solution(c.exact, *model_, c.model_parameters);
    options_.discretization.splitting = c.splitting.value_or(model_->preferred_splitting());
    options_.extrapolation.epsilon = c.extrapolation_epsilon;
    options_.extrapolation.weights =
        c.extrapolation_weights == "linear" ? ExtrapolationWeights::Linear : ExtrapolationWeights::Nonlinear;
    positivity_.euler = dynamic_cast<const ReactiveEuler*>(model_.get());
    dir_ = std::filesystem::path(resolve_output_directory(c)) / c.name;
    result_.name = c.name;
    result_.resolution = resolution;
  }

  RunResult run() {
    const auto start = std::chrono::steady_clock::now();
    if (c_.dimension == 1) {
      run_1d();
    } else {
      run_2d();
    }
    result_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (positivity_.euler != nullptr) {
      result_.min_density = positivity_.rho;
      result_.min_pressure = positivity_.p;
    }
    result_.manifest = manifest();
    if (o_.write_output) {
      const auto path = dir_ / ("manifest_r" + std::to_string(resolution_) + ".json");
      result_.files.push_back(path.string());
      result_.manifest["files"] = result_.files;
      write_json(path, result_.manifest);
    }
    return result_;
  }

 private:
  const ExactSolution* exact() const { return exact_ ? &*exact_ : nullptr; }

  void log_step(int step, double t, double dt) {
    if (o_.log == nullptr || !c_.verbose || step % 100 != 0) return;
    *o_.log << c_.name << " r" << resolution_ << ": step " << step << ", t = " << t << ", dt = " << dt << '\n';
  }

  template <typename Solver>
  void advance(Solver& solver, double t_end, const std::function<void()>& observe) {
    int done_before = result_.steps;
    const int budget = c_.max_steps > 0 ? c_.max_steps - result_.steps : 0;
    if (c_.max_steps > 0 && budget <= 0) return;
    try {
      const auto r = solver.advance(t_end, c_.cfl, budget, [&](int k, double t, double dt) {
        result_.steps = done_before + k;
        observe();
        log_step(result_.steps, t, dt);
      });
      result_.steps = done_before + r.steps;
      result_.time = r.time;
      result_.reached_end = r.reached_end;
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "scenario '" << c_.name << "', dx = 1/" << resolution_ << ", step " << result_.steps + 1
          << " from t = " << solver.time() << ": " << e.detail();
      throw Error(e.code(), msg.str());
    }
  }

  std::vector<double> snapshot_times() const {
    std::vector<double> out;
    for (double s : c_.snapshots) {
      if (s > 0.0 && s < c_.t_end) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void record_file(const std::filesystem::path& p) { result_.files.push_back(p.string()); }

  void run_1d() {
    const Grid1D grid = make_grid_1d(c_, resolution_);
    result_.dx = grid.dx;
    result_.nodes = static_cast<std::size_t>(grid.n);
    Solver1D solver(model_, grid, tableau_, boundary_relation_1d(c_, "left", *model_, grid, exact()),
                    boundary_relation_1d(c_, "right", *model_, grid, exact()), options_);
    solver.set_initial(initial_condition_1d(c_, *model_, exact()));
    auto observe = [&] {
      for (int j = 0; j < grid.n; ++j) positivity_.observe(solver.solution()[j]);
    };
    observe();
    auto dump = [&](const std::string& suffix) {
      if (!o_.write_output || !c_.write_fields) return;
      const auto p = dir_ / ("field_r" + std::to_string(resolution_) + suffix + ".csv");
      write_field_csv(p, solver.solution(), grid, *model_);
      record_file(p);
    };
    for (double s : snapshot_times()) {
      advance(solver, s, observe);
      dump("_t" + time_tag(s));
    }
    advance(solver, c_.t_end, observe);
    dump("");
    for (int j = 0; j < grid.n; ++j) summarize(solver.solution()[j]);
    if (exact_) {
      const double t = solver.time();
      auto f = exact_->value;
      result_.errors = error_norms(
          solver.solution(), grid, [&](double x) { return f(t, x, 0.0); }, c_.norm_component, c_.exclude_left,
          c_.exclude_right);
    }
  }

  void run_2d() {
    const Grid2D grid = make_grid_2d(c_, resolution_);
    result_.dx = grid.dx;
    result_.nodes = grid.interior_count();
    Solver2D solver(model_, grid, tableau_, face_conditions(c_, grid, *model_), options_);
    solver.set_initial(initial_condition_2d(c_, *model_, exact()));
    auto observe = [&] {
      for (const NodeIndex& p : grid.interior_nodes()) positivity_.observe(solver.solution()(p));
    };
    observe();
    auto dump = [&](const std::string& suffix) {
      if (!o_.write_output || !c_.write_fields) return;
      const auto p = dir_ / ("field_r" + std::to_string(resolution_) + suffix + ".csv");
      write_field_csv(p, solver.solution(), grid, *model_);
      record_file(p);
    };
    for (double s : snapshot_times()) {
      advance(solver, s, observe);
      dump("_t" + time_tag(s));
    }
    advance(solver, c_.t_end, observe);
    dump("");
    for (const NodeIndex& p : grid.interior_nodes()) summarize(solver.solution()(p));
    if (exact_) {
      const double t = solver.time();
      auto f = exact_->value;
      result_.errors = error_norms(
          solver.solution(), grid, [&](double x, double y) { return f(t, x, y); }, c_.norm_component);
    }
  }

  void summarize(const State& u) {
    if (!u.allFinite()) result_.finite = false;
    result_.max_abs = std::max(result_.max_abs, u.cwiseAbs().maxCoeff());
  }

  nlohmann::json manifest() const {
    nlohmann::json m;
    m["config"] = to_json(c_);
    m["resolved"] = {{"resolution", resolution_},
                     {"dx", result_.dx},
                     {"interior_nodes", result_.nodes},
                     {"tableau", tableau_.name},
                     {"splitting", to_string(options_.discretization.splitting)},
                     {"weno_epsilon", options_.discretization.weno_epsilon},
                     {"extrapolation_epsilon", options_.extrapolation.epsilon},
                     {"extrapolation_weights", c_.extrapolation_weights},
                     {"output_directory", dir_.string()}};
    m["run"] = {{"steps", result_.steps},
                {"time", result_.time},
                {"reached_end", result_.reached_end},
                {"wall_seconds", result_.wall_seconds},
                {"finite", result_.finite},
                {"max_abs", result_.max_abs}};
    if (result_.errors) m["errors"] = norms_json(*result_.errors);
    if (positivity_.euler != nullptr) {
      m["run"]["min_density"] = positivity_.rho;
      m["run"]["min_pressure"] = positivity_.p;
    }
    return m;
  }

  const ScenarioConfig& c_;
  const RunOptions& o_;
  int resolution_;
  ModelPtr model_;
  IMEXTableau tableau_;
  std::optional<ExactSolution> exact_;
  SolverOptions options_;
  Positivity positivity_;
  std::filesystem::path dir_;
  RunResult result_;
};

}  // namespace

RunResult run_scenario(const ScenarioConfig& config, const RunOptions& options) {
  const int resolution = options.resolution.value_or(config.refinements.back());
  if (resolution <= 0) throw Error(ErrorCode::ConfigError, "resolution must be positive");
  return Runner(config, options, resolution).run();
}

ConvergenceReport convergence_study(const ScenarioConfig& config, const RunOptions& options,
                                    std::vector<RunResult>* runs) {
  if (config.exact.empty()) {
    throw Error(ErrorCode::ConfigError, "convergence study of '" + config.name + "' needs an exact solution");
  }
  std::vector<ConvergenceRow> rows;
  for (int r : config.refinements) {
    RunOptions o = options;
    o.resolution = r;
    RunResult res = run_scenario(config, o);
    if (options.log != nullptr) {
      *options.log << config.name << ": dx = 1/" << r << " done in " << res.steps << " steps, "
                   << res.wall_seconds << " s\n";
    }
    rows.push_back({r, res.dx, *res.errors, res.steps});
    if (runs != nullptr) runs->push_back(std::move(res));
  }
  ConvergenceReport report = make_report(config.name, std::move(rows));
  if (options.write_output) {
    const auto dir = std::filesystem::path(resolve_output_directory(config)) / config.name;
    write_text(dir / "convergence.csv", report_csv(report));
    write_text(dir / "convergence.txt", format_report(report));
  }
  return report;
}

}  // namespace imexilw
