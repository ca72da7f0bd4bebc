#include "imexilw/boundary1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "imexilw/error.hpp"

namespace imexilw {

namespace {

constexpr int kNewtonMaxIterations = 50;
constexpr double kNewtonTolerance = 1e-12;
constexpr double kSingularRcond = 1e-14;
constexpr double kZeroEigenvalue = 1e-10;

CharacteristicSplit sorted_split(const LocalSystem& sys, const State& u0) {
  const Eigensystem e = sys.normal_eigensystem(u0);
  const int m = sys.components();
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return e.eigenvalues(a) < e.eigenvalues(b); });
  CharacteristicSplit s;
  s.eigenvalues.resize(m);
  s.left.resize(m, m);
  s.right.resize(m, m);
  for (int k = 0; k < m; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    s.eigenvalues(k) = e.eigenvalues(src);
    s.left.row(k) = e.left.row(src);
    s.right.col(k) = e.right.col(src);
  }
  return s;
}

std::array<State, 3> project(const Matrix& left, const std::array<State, 3>& samples) {
  return {State(left * samples[0]), State(left * samples[1]), State(left * samples[2])};
}

}  // namespace

CharacteristicSplit characteristic_split(const LocalSystem& sys, const State& u0) {
  CharacteristicSplit s = sorted_split(sys, u0);
  for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
    if (std::abs(s.eigenvalues(k)) < kZeroEigenvalue) {
      std::ostringstream msg;
      msg << "eigenvalue " << s.eigenvalues(k) << " does not separate incoming from outgoing waves";
      throw Error(ErrorCode::ZeroEigenvalue, msg.str());
    }
    if (s.eigenvalues(k) < 0.0) s.incoming = static_cast<int>(k) + 1;
  }
  return s;
}

CharacteristicSplit characteristic_split(const LocalSystem& sys, const State& u0, int relation_count) {
  if (relation_count < 0 || relation_count > sys.components()) {
    throw Error(ErrorCode::ConfigError, "relation count exceeds the number of components");
  }
  CharacteristicSplit s = sorted_split(sys, u0);
  s.incoming = relation_count;
  return s;
}

State boundary_state_n(const LocalSystem& sys, const CharacteristicSplit& split, const State& v_star,
                       const BoundaryRelation& relation, double t, const State& guess) {
  const int m = sys.components();
  const int p = split.incoming;
  State u = guess;
  const double scale = std::max(1.0, std::max(u.cwiseAbs().maxCoeff(), v_star.cwiseAbs().maxCoeff()));
  for (int iter = 0; iter < kNewtonMaxIterations; ++iter) {
    State residual(m);
    Matrix jac(m, m);
    if (p > 0) {
      residual.head(p) = relation.value(u, t);
      jac.topRows(p) = relation.jacobian(u, t);
    }
    for (int k = p; k < m; ++k) {
      residual(k) = split.left.row(k).dot(u) - v_star(k);
      jac.row(k) = split.left.row(k);
    }
    if (residual.cwiseAbs().maxCoeff() <= kNewtonTolerance * scale) return u;
    Eigen::PartialPivLU<Matrix> lu(jac);
    if (!(lu.rcond() >= kSingularRcond)) {
      throw Error(ErrorCode::SingularBoundaryJacobian, "boundary relations and outgoing rows are dependent");
    }
    const State step = lu.solve(residual);
    u -= step;
    if (!u.allFinite()) break;
    if (step.cwiseAbs().maxCoeff() <= 1e-15 * std::max(1.0, u.cwiseAbs().maxCoeff())) return u;
  }
  throw Error(ErrorCode::NewtonDivergence, "boundary state solve did not converge");
}

State boundary_first_derivative_ilw(const LocalSystem& sys, const CharacteristicSplit& split, const State& u0,
                                    const State& v_star_first, const BoundaryRelation& relation, double t,
                                    const State& tangential) {
  const int m = sys.components();
  const int p = split.incoming;
  Matrix lhs(m, m);
  State rhs(m);
  if (p > 0) {
    const Matrix bu = relation.jacobian(u0, t);
    lhs.topRows(p) = bu * sys.normal_jacobian(u0);
    rhs.head(p) = bu * (sys.source(u0) - tangential) + relation.time_derivative(u0, t);
  }
  for (int k = p; k < m; ++k) {
    lhs.row(k) = split.left.row(k);
    rhs(k) = v_star_first(k);
  }
  Eigen::PartialPivLU<Matrix> lu(lhs);
  if (!(lu.rcond() >= kSingularRcond)) {
    throw Error(ErrorCode::SingularILWSystem, "inverse Lax-Wendroff system is singular");
  }
  return lu.solve(rhs);
}

State boundary_second_derivative(const CharacteristicSplit& split, const State& v_star_second) {
  return split.right * v_star_second;
}

State taylor_ghost(const State& u0, const State& u1, const State& u2, double distance) {
  return u0 + distance * u1 + (0.5 * distance * distance) * u2;
}

StageRecord make_stage_record(const LocalSystem& sys, const State& value, const State& first,
                              const State& tangential, const State& flux_second) {
  StageRecord r;
  r.value = value;
  r.first = first;
  r.flux_derivative = sys.normal_jacobian(value) * first + tangential;
  r.source = sys.source(value);
  r.source_derivative = sys.source_jacobian(value) * first;
  r.flux_second = flux_second;
  return r;
}

std::array<State, 2> fill_ghosts_time_n(const BoundaryStageCache& cache, const std::array<double, 2>& distances) {
  return stage_fill_ghosts(cache.level_value, cache.level_first, cache.level_second, distances);
}

State stage_boundary_value(const BoundaryStageCache& cache, const IMEXTableau& tableau, int stage,
                           const LocalSystem& sys, double dt) {
  if (static_cast<int>(cache.stages.size()) < stage) {
    throw Error(ErrorCode::MissingGhostData, "earlier stage boundary data is missing");
  }
  State rhs = cache.level_value;
  for (int j = 0; j < stage; ++j) {
    const StageRecord& r = cache.stages[static_cast<std::size_t>(j)];
    const double at = tableau.a_tilde(stage, j);
    const double a = tableau.a(stage, j);
    if (at != 0.0) rhs -= (dt * at) * r.flux_derivative;
    if (a != 0.0) rhs += (dt * a) * r.source;
  }
  return sys.solve_implicit(rhs, dt * tableau.a(stage, stage));
}

State stage_boundary_derivative(const BoundaryStageCache& cache, const IMEXTableau& tableau, int stage,
                                const LocalSystem& sys, double dt, const State& value) {
  if (static_cast<int>(cache.stages.size()) < stage) {
    throw Error(ErrorCode::MissingGhostData, "earlier stage boundary data is missing");
  }
  const int m = sys.components();
  State rhs = cache.level_first;
  for (int j = 0; j < stage; ++j) {
    const StageRecord& r = cache.stages[static_cast<std::size_t>(j)];
    const double at = tableau.a_tilde(stage, j);
    const double a = tableau.a(stage, j);
    if (at != 0.0) rhs -= (dt * at) * r.flux_second;
    if (a != 0.0) rhs += (dt * a) * r.source_derivative;
  }
  const double aii = tableau.a(stage, stage);
  if (aii == 0.0) return rhs;
  const Matrix lhs = Matrix::Identity(m, m) - (dt * aii) * sys.source_jacobian(value);
  Eigen::PartialPivLU<Matrix> lu(lhs);
  if (!(lu.rcond() >= kSingularRcond)) {
    throw Error(ErrorCode::SingularStageMatrix, "stage derivative matrix is singular");
  }
  return lu.solve(rhs);
}

std::array<State, 2> stage_fill_ghosts(const State& value, const State& first, const State& second,
                                       const std::array<double, 2>& distances) {
  return {taylor_ghost(value, first, second, distances[0]), taylor_ghost(value, first, second, distances[1])};
}

BoundaryPoint::BoundaryPoint(const LocalSystem& sys, const BoundaryRelation& relation,
                             ExtrapolationStencil stencil, ExtrapolationOptions extrapolation,
                             bool tangential)
    : sys_(&sys), relation_(&relation), stencil_(stencil), extrapolation_(extrapolation), tangential_(tangential) {
  const int m = sys.components();
  tangential_trace_ = {State::Zero(m), State::Zero(m)};
}

void BoundaryPoint::extrapolate_tangential(const std::array<State, 3>& samples) {
  if (!tangential_) return;
  const std::array<State, 3> g = {sys_->tangential_flux(samples[0]), sys_->tangential_flux(samples[1]),
                                  sys_->tangential_flux(samples[2])};
  const int m = sys_->components();
  for (int c = 0; c < m; ++c) {
    const ExtrapolationResult r = weno_extrapolate({g[0](c), g[1](c), g[2](c)}, stencil_, extrapolation_);
    tangential_trace_[0](c) = r.derivatives[0];
    tangential_trace_[1](c) = r.derivatives[1];
  }
}

State BoundaryPoint::characteristic_second(const std::array<State, 3>& samples) const {
  const std::array<State, 3> v = project(cache_.split.left, samples);
  return boundary_second_derivative(cache_.split, weno_extrapolate(v, stencil_, 2, extrapolation_));
}

void BoundaryPoint::begin_level(const std::array<State, 3>& samples) {
  const int m = sys_->components();
  cache_.split = characteristic_split(*sys_, samples[0], relation_->count);
  const std::array<State, 3> v = project(cache_.split.left, samples);
  v_star_value_.resize(m);
  v_star_first_.resize(m);
  State v_star_second(m);
  for (int c = 0; c < m; ++c) {
    const ExtrapolationResult r = weno_extrapolate({v[0](c), v[1](c), v[2](c)}, stencil_, extrapolation_);
    v_star_value_(c) = r.derivatives[0];
    v_star_first_(c) = r.derivatives[1];
    v_star_second(c) = r.derivatives[2];
  }
  cache_.level_second = boundary_second_derivative(cache_.split, v_star_second);
  if (guess_.size() != m) guess_ = samples[0];
  extrapolate_tangential(samples);
}

void BoundaryPoint::solve_level(double t_n, const State& tangential) {
  cache_.level_value = boundary_state_n(*sys_, cache_.split, v_star_value_, *relation_, t_n, guess_);
  cache_.level_first = boundary_first_derivative_ilw(*sys_, cache_.split, cache_.level_value, v_star_first_,
                                                     *relation_, t_n, tangential);
  cache_.stages.clear();
  guess_ = cache_.level_value;
  current_ = {cache_.level_value, cache_.level_first, cache_.level_second};
}

void BoundaryPoint::begin_stage(int stage, const std::array<State, 3>& samples) {
  if (static_cast<int>(cache_.stages.size()) != stage) {
    throw Error(ErrorCode::MissingGhostData, "boundary stages must be completed in order");
  }
  stage_second_ = characteristic_second(samples);
  const std::array<State, 3> f = {sys_->normal_flux(samples[0]), sys_->normal_flux(samples[1]),
                                  sys_->normal_flux(samples[2])};
  stage_flux_second_ = weno_extrapolate(f, stencil_, 2, extrapolation_);
  extrapolate_tangential(samples);
}

void BoundaryPoint::solve_stage(int stage, const IMEXTableau& tableau, double dt, const State& tangential,
                                const State& mixed) {
  const State value = stage_boundary_value(cache_, tableau, stage, *sys_, dt);
  const State first = stage_boundary_derivative(cache_, tableau, stage, *sys_, dt, value);
  cache_.stages.push_back(make_stage_record(*sys_, value, first, tangential, stage_flux_second_ + mixed));
  current_ = {value, first, stage_second_};
}

State BoundaryPoint::ghost(double distance) const {
  return taylor_ghost(current_[0], current_[1], current_[2], distance);
}

BoundarySide1D::BoundarySide1D(const Model& model, const Grid1D& grid, Side side, BoundaryRelation relation,
                               ExtrapolationOptions extrapolation)
    : grid_(&grid),
      side_(side),
      relation_(std::move(relation)),
      sys_(model, make_frame(side == Side::Left ? std::numbers::pi : 0.0)) {
  const double eta = side == Side::Left ? grid.eta_left : grid.eta_right;
  distances_ = {(1.0 - eta) * grid.dx, (2.0 - eta) * grid.dx};
  if (relation_.uses_ghost_solver()) {
    point_.emplace(sys_, relation_, ExtrapolationStencil{-eta * grid.dx, -grid.dx, 0.0}, extrapolation, false);
  }
}

std::array<State, 3> BoundarySide1D::samples(const Field1D& field) const {
  const int n = grid_->n;
  if (side_ == Side::Left) return {sys_.to_local(field[0]), sys_.to_local(field[1]), sys_.to_local(field[2])};
  return {sys_.to_local(field[n - 1]), sys_.to_local(field[n - 2]), sys_.to_local(field[n - 3])};
}

void BoundarySide1D::write_ghosts(Field1D& field, const BoundaryPoint& p) const {
  const int n = grid_->n;
  for (int k = 1; k <= kGhostLayers; ++k) {
    const State g = sys_.to_global(p.ghost(distances_[static_cast<std::size_t>(k - 1)]));
    if (side_ == Side::Left) {
      field[-k] = g;
    } else {
      field[n - 1 + k] = g;
    }
  }
}

void BoundarySide1D::copy_outflow(Field1D& field) const {
  const int n = grid_->n;
  for (int k = 1; k <= kGhostLayers; ++k) {
    if (side_ == Side::Left) {
      field[-k] = field[k - 1];
    } else {
      field[n - 1 + k] = field[n - k];
    }
  }
}

void BoundarySide1D::begin_step(const Field1D& un, double t_n) {
  if (!point_) return;
  point_->begin_level(samples(un));
  point_->solve_level(t_n, State::Zero(sys_.components()));
}

void BoundarySide1D::fill_level(Field1D& un) const {
  if (point_) {
    write_ghosts(un, *point_);
  } else if (relation_.kind == BoundaryKind::OutflowCopy) {
    copy_outflow(un);
  }
}

void BoundarySide1D::complete_stage(int stage, Field1D& field, const IMEXTableau& tableau, double dt) {
  if (point_) {
    point_->begin_stage(stage, samples(field));
    const State zero = State::Zero(sys_.components());
    point_->solve_stage(stage, tableau, dt, zero, zero);
    write_ghosts(field, *point_);
  } else if (relation_.kind == BoundaryKind::OutflowCopy) {
    copy_outflow(field);
  }
}

}  // namespace imexilw
