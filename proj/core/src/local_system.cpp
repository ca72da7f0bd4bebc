#include "imexilw/local_system.hpp"

#include <cmath>
#include <numbers>

namespace imexilw {

Eigen::Matrix2d LocalFrame::rotation() const {
  Eigen::Matrix2d t;
  t << cos_t, sin_t, -sin_t, cos_t;
  return t;
}

LocalFrame make_frame(double theta) {
  LocalFrame f;
  f.theta = theta;
  const double quarter = theta / (std::numbers::pi / 2.0);
  const double r = std::round(quarter);
  if (std::abs(quarter - r) < 1e-12) {
    const int k = ((static_cast<int>(r) % 4) + 4) % 4;
    const double c[4] = {1.0, 0.0, -1.0, 0.0};
    const double s[4] = {0.0, 1.0, 0.0, -1.0};
    f.cos_t = c[k];
    f.sin_t = s[k];
  } else {
    f.cos_t = std::cos(theta);
    f.sin_t = std::sin(theta);
  }
  return f;
}

State rotate_state(const State& u, double theta, const Model& model) {
  const LocalFrame f = make_frame(theta);
  return model.rotate(u, f.cos_t, f.sin_t);
}

LocalSystem::LocalSystem(const Model& model, LocalFrame frame)
    : model_(&model), frame_(frame), m_(model.components()), p_(m_, m_) {
  for (int k = 0; k < m_; ++k) {
    State e = State::Zero(m_);
    e(k) = 1.0;
    p_.col(k) = to_local(e);
  }
}

State LocalSystem::normal_flux(const State& uh) const {
  return to_local(model_->flux(to_global(uh), frame_.normal()));
}

State LocalSystem::tangential_flux(const State& uh) const {
  return to_local(model_->flux(to_global(uh), frame_.tangent()));
}

Matrix LocalSystem::normal_jacobian(const State& uh) const {
  return p_ * model_->flux_jacobian(to_global(uh), frame_.normal()) * p_.transpose();
}

Eigensystem LocalSystem::normal_eigensystem(const State& uh) const {
  Eigensystem e = model_->eigensystem(to_global(uh), frame_.normal());
  e.left = e.left * p_.transpose();
  e.right = p_ * e.right;
  return e;
}

State LocalSystem::source(const State& uh) const { return to_local(model_->source(to_global(uh))); }

Matrix LocalSystem::source_jacobian(const State& uh) const {
  return p_ * model_->source_jacobian(to_global(uh)) * p_.transpose();
}

State LocalSystem::solve_implicit(const State& rhs, double coeff) const {
  return to_local(model_->solve_implicit(to_global(rhs), coeff));
}

}  // namespace imexilw
