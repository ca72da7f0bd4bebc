#include <algorithm>
#include <cmath>
#include <sstream>

#include "imexilw/error.hpp"
#include "imexilw/stepper.hpp"

namespace imexilw {

State implicit_point_solve(const State& rhs, double a_ii, double dt, const Model& model) {
  if (a_ii < 0.0) throw Error(ErrorCode::InvalidTableau, "diagonal implicit coefficient must be nonnegative");
  if (a_ii == 0.0) return rhs;
  return model.solve_implicit(rhs, dt * a_ii);
}

double clip_to_end(double dt, double t, double t_end) {
  if (t + dt >= t_end - 1e-14 * std::max(1.0, std::abs(t_end))) return t_end - t;
  return dt;
}

Solver1D::Solver1D(ModelPtr model, const Grid1D& grid, IMEXTableau tableau, BoundaryRelation left,
                   BoundaryRelation right, SolverOptions options)
    : model_(std::move(model)), grid_(grid), tableau_(validate(std::move(tableau))), options_(options) {
  const bool left_periodic = left.kind == BoundaryKind::Periodic;
  const bool right_periodic = right.kind == BoundaryKind::Periodic;
  if (left_periodic != right_periodic) throw Error(ErrorCode::ConfigError, "periodic sides must come in pairs");
  periodic_ = left_periodic;
  left_ = std::make_unique<BoundarySide1D>(*model_, grid_, Side::Left, std::move(left),
                                           options_.extrapolation);
  right_ = std::make_unique<BoundarySide1D>(*model_, grid_, Side::Right, std::move(right),
                                            options_.extrapolation);
  const int m = model_->components();
  u_ = Field1D(grid_.n, m);
  const auto s = static_cast<std::size_t>(tableau_.s);
  stages_.assign(s, Field1D(grid_.n, m));
  divergence_.assign(s, Field1D(grid_.n, m));
  sources_.assign(s, Field1D(grid_.n, m));
}

void Solver1D::set_initial(const std::function<State(double)>& u0, double t0) {
  for (int j = 0; j < grid_.n; ++j) u_[j] = u0(grid_.x(j));
  u_.invalidate_ghosts();
  t_ = t0;
}

double Solver1D::compute_dt(double cfl) const {
  return cfl * grid_.dx / global_alpha(u_, *model_, options_.discretization);
}

void Solver1D::apply_periodic(Field1D& field) const {
  const int n = grid_.n;
  for (int k = 1; k <= kGhostLayers; ++k) {
    field[-k] = field[n - k];
    field[n - 1 + k] = field[k - 1];
  }
}

void Solver1D::fill_ghosts() {
  left_->begin_step(u_, t_);
  right_->begin_step(u_, t_);
  left_->fill_level(u_);
  right_->fill_level(u_);
  if (periodic_) apply_periodic(u_);
}

void Solver1D::step(double dt) {
  const int n = grid_.n;
  const int s = tableau_.s;
  fill_ghosts();

  for (int i = 0; i < s; ++i) {
    Field1D& ui = stages_[static_cast<std::size_t>(i)];
    const double aii = tableau_.a(i, i);
    for (int x = 0; x < n; ++x) {
      State rhs = u_[x];
      for (int j = 0; j < i; ++j) {
        const double at = tableau_.a_tilde(i, j);
        const double a = tableau_.a(i, j);
        if (at != 0.0) rhs -= (dt * at) * divergence_[static_cast<std::size_t>(j)][x];
        if (a != 0.0) rhs += (dt * a) * sources_[static_cast<std::size_t>(j)][x];
      }
      try {
        ui[x] = implicit_point_solve(rhs, aii, dt, *model_);
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << e.detail() << " at x = " << grid_.x(x) << ", t = " << t_;
        throw Error(e.code(), msg.str());
      }
    }
    ui.invalidate_ghosts();

    const bool need_div = tableau_.explicit_column_used(i);
    const bool need_src = tableau_.implicit_column_used(i);
    if (need_div || i + 1 < s) {
      left_->complete_stage(i, ui, tableau_, dt);
      right_->complete_stage(i, ui, tableau_, dt);
      if (periodic_) apply_periodic(ui);
    }
    if (need_div) {
      const double alpha = global_alpha(ui, *model_, options_.discretization);
      spatial_divergence(ui, *model_, grid_, alpha, options_.discretization, divergence_[static_cast<std::size_t>(i)]);
    }
    if (need_src) {
      Field1D& q = sources_[static_cast<std::size_t>(i)];
      for (int x = 0; x < n; ++x) q[x] = model_->source(ui[x]);
    }
  }

  const bool last_stage = tableau_.stiffly_accurate();
  for (int x = 0; x < n; ++x) {
    // Taking the last stage directly keeps stiff relaxation exactly on the discrete
    // equilibrium; the weighted sum would leave O(dt * roundoff / epsilon) residue.
    if (last_stage) {
      u_[x] = stages_.back()[x];
      continue;
    }
    State next = u_[x];
    for (int i = 0; i < s; ++i) {
      const double wt = tableau_.w_tilde(i);
      const double w = tableau_.w(i);
      if (wt != 0.0) next -= (dt * wt) * divergence_[static_cast<std::size_t>(i)][x];
      if (w != 0.0) next += (dt * w) * sources_[static_cast<std::size_t>(i)][x];
    }
    u_[x] = next;
  }
  u_.invalidate_ghosts();
  t_ += dt;
}

AdvanceResult Solver1D::advance(double t_end, double cfl, int max_steps,
                                const std::function<void(int, double, double)>& on_step) {
  AdvanceResult r;
  const double tol = 1e-14 * std::max(1.0, std::abs(t_end));
  while (t_ < t_end - tol) {
    if (max_steps > 0 && r.steps >= max_steps) break;
    const double dt = clip_to_end(compute_dt(cfl), t_, t_end);
    step(dt);
    ++r.steps;
    if (on_step) on_step(r.steps, t_, dt);
  }
  r.time = t_;
  r.reached_end = t_ >= t_end - tol;
  return r;
}

}  // namespace imexilw
