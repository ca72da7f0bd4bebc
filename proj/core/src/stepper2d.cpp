#include <algorithm>
#include <cmath>
#include <sstream>

#include "imexilw/error.hpp"
#include "imexilw/stepper.hpp"

namespace imexilw {

Solver2D::Solver2D(ModelPtr model, const Grid2D& grid, IMEXTableau tableau, std::vector<FaceCondition> conditions,
                   SolverOptions options)
    : model_(std::move(model)), grid_(grid), tableau_(validate(std::move(tableau))), options_(options) {
  boundaries_ = BoundaryConditions2D(*model_, grid_, std::move(conditions), options_.extrapolation);
  const int m = model_->components();
  u_ = Field2D(grid_, m);
  const auto s = static_cast<std::size_t>(tableau_.s);
  stages_.assign(s, Field2D(grid_, m));
  divergence_.assign(s, Field2D(grid_, m));
  sources_.assign(s, Field2D(grid_, m));
}

void Solver2D::set_initial(const std::function<State(double, double)>& u0, double t0) {
  for (const auto& p : grid_.interior_nodes()) u_(p) = u0(grid_.x(p.i), grid_.y(p.j));
  u_.invalidate(grid_.ghost_nodes());
  t_ = t0;
}

double Solver2D::compute_dt(double cfl) const {
  const double ax = global_alpha(u_, grid_, *model_, kXDirection, options_.discretization);
  const double ay = global_alpha(u_, grid_, *model_, kYDirection, options_.discretization);
  // sum of directional speeds; the max alone is unstable at cfl 0.8
  return cfl * grid_.dx / (ax + ay);
}

void Solver2D::fill_ghosts() {
  boundaries_.begin_step(u_, t_);
  boundaries_.fill_level(u_);
}

void Solver2D::step(double dt) {
  const int s = tableau_.s;
  const auto& nodes = grid_.interior_nodes();
  fill_ghosts();

  for (int i = 0; i < s; ++i) {
    Field2D& ui = stages_[static_cast<std::size_t>(i)];
    const double aii = tableau_.a(i, i);
    for (const auto& p : nodes) {
      State rhs = u_(p);
      for (int j = 0; j < i; ++j) {
        const double at = tableau_.a_tilde(i, j);
        const double a = tableau_.a(i, j);
        if (at != 0.0) rhs -= (dt * at) * divergence_[static_cast<std::size_t>(j)](p);
        if (a != 0.0) rhs += (dt * a) * sources_[static_cast<std::size_t>(j)](p);
      }
      try {
        ui(p) = implicit_point_solve(rhs, aii, dt, *model_);
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << e.detail() << " at (" << grid_.x(p.i) << ", " << grid_.y(p.j) << "), t = " << t_;
        throw Error(e.code(), msg.str());
      }
    }
    ui.invalidate(grid_.ghost_nodes());

    const bool need_div = tableau_.explicit_column_used(i);
    const bool need_src = tableau_.implicit_column_used(i);
    if (need_div || i + 1 < s) boundaries_.complete_stage(i, ui, tableau_, dt);
    if (need_div) {
      Field2D& div = divergence_[static_cast<std::size_t>(i)];
      const double ax = global_alpha(ui, grid_, *model_, kXDirection, options_.discretization);
      const double ay = global_alpha(ui, grid_, *model_, kYDirection, options_.discretization);
      spatial_divergence(ui, *model_, grid_, kXDirection, ax, options_.discretization, div, false);
      spatial_divergence(ui, *model_, grid_, kYDirection, ay, options_.discretization, div, true);
    }
    if (need_src) {
      Field2D& q = sources_[static_cast<std::size_t>(i)];
      for (const auto& p : nodes) q(p) = model_->source(ui(p));
    }
  }

  const bool last_stage = tableau_.stiffly_accurate();
  for (const auto& p : nodes) {
    if (last_stage) {
      u_(p) = stages_.back()(p);
      continue;
    }
    State next = u_(p);
    for (int i = 0; i < s; ++i) {
      const double wt = tableau_.w_tilde(i);
      const double w = tableau_.w(i);
      if (wt != 0.0) next -= (dt * wt) * divergence_[static_cast<std::size_t>(i)](p);
      if (w != 0.0) next += (dt * w) * sources_[static_cast<std::size_t>(i)](p);
    }
    u_(p) = next;
  }
  u_.invalidate(grid_.ghost_nodes());
  t_ += dt;
}

AdvanceResult Solver2D::advance(double t_end, double cfl, int max_steps,
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
