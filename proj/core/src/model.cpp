#include "imexilw/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "imexilw/error.hpp"

namespace imexilw {

namespace {

constexpr int kNewtonMaxIterations = 50;
constexpr double kNewtonTolerance = 1e-12;
constexpr double kSingularRcond = 1e-14;

}  // namespace

Matrix Model::flux_jacobian(const State& u, Direction dir) const {
  return finite_difference_jacobian([&](const State& x) { return flux(x, dir); }, u);
}

double Model::max_speed(const State& u, Direction dir) const {
  return eigensystem(u, dir).eigenvalues.cwiseAbs().maxCoeff();
}

State Model::source(const State& u) const { return State::Zero(u.size()); }

Matrix Model::source_jacobian(const State& u) const {
  if (!has_source()) return Matrix::Zero(u.size(), u.size());
  return finite_difference_jacobian([&](const State& x) { return source(x); }, u);
}

State Model::solve_implicit(const State& rhs, double coeff) const {
  if (coeff == 0.0 || !has_source()) return rhs;
  return newton_implicit_solve(*this, rhs, coeff);
}

void Model::check_admissible(const State&) const {}

State Model::rotate(const State& u, double, double) const { return u; }

std::vector<std::string> Model::component_names() const {
  std::vector<std::string> names;
  for (int k = 0; k < components(); ++k) names.push_back("u" + std::to_string(k));
  return names;
}

std::vector<double> Model::derived(const State&) const { return {}; }

Matrix finite_difference_jacobian(const std::function<State(const State&)>& f, const State& u,
                                  double relative_step) {
  const auto m = u.size();
  State f0 = f(u);
  Matrix jac(f0.size(), m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const double h = relative_step * std::max(1.0, std::abs(u(k)));
    State up = u;
    State um = u;
    up(k) += h;
    um(k) -= h;
    jac.col(k) = (f(up) - f(um)) / (2.0 * h);
  }
  return jac;
}

State newton_implicit_solve(const Model& model, const State& rhs, double coeff) {
  State u = rhs;
  const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  const auto m = rhs.size();
  for (int iter = 0; iter < kNewtonMaxIterations; ++iter) {
    State residual = u - coeff * model.source(u) - rhs;
    if (residual.cwiseAbs().maxCoeff() <= kNewtonTolerance * scale) return u;
    Matrix jac = Matrix::Identity(m, m) - coeff * model.source_jacobian(u);
    Eigen::PartialPivLU<Matrix> lu(jac);
    if (!(lu.rcond() >= kSingularRcond)) {
      throw Error(ErrorCode::SingularStageMatrix, "implicit source Jacobian is singular");
    }
    State step = lu.solve(residual);
    u -= step;
    if (!u.allFinite()) break;
    if (step.cwiseAbs().maxCoeff() <= 1e-15 * std::max(1.0, u.cwiseAbs().maxCoeff())) {
      residual = u - coeff * model.source(u) - rhs;
      if (residual.cwiseAbs().maxCoeff() <= 1e3 * kNewtonTolerance * scale) return u;
    }
  }
  std::ostringstream msg;
  msg << "implicit source solve did not converge for rhs = " << rhs.transpose();
  throw Error(ErrorCode::NewtonDivergence, msg.str());
}

}  // namespace imexilw
