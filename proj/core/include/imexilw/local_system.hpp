#pragma once

#include "imexilw/model.hpp"
#include "imexilw/types.hpp"

namespace imexilw {

// Frame at a boundary point: x-hat along the outward normal at angle theta.
struct LocalFrame {
  double theta = 0.0;
  double cos_t = 1.0;
  double sin_t = 0.0;

  Direction normal() const { return {cos_t, sin_t}; }
  Direction tangent() const { return {-sin_t, cos_t}; }
  Eigen::Matrix2d rotation() const;
};

// Exact sine and cosine at multiples of pi/2.
LocalFrame make_frame(double theta);

State rotate_state(const State& u, double theta, const Model& model);

// A model seen in a local frame: states are rotated, x-hat is the normal.
class LocalSystem {
 public:
  LocalSystem(const Model& model, LocalFrame frame);

  const Model& model() const { return *model_; }
  const LocalFrame& frame() const { return frame_; }
  int components() const { return m_; }

  State to_local(const State& u) const { return model_->rotate(u, frame_.cos_t, frame_.sin_t); }
  State to_global(const State& u) const { return model_->rotate(u, frame_.cos_t, -frame_.sin_t); }

  State normal_flux(const State& uh) const;
  State tangential_flux(const State& uh) const;
  Matrix normal_jacobian(const State& uh) const;
  Eigensystem normal_eigensystem(const State& uh) const;
  State source(const State& uh) const;
  Matrix source_jacobian(const State& uh) const;
  State solve_implicit(const State& rhs, double coeff) const;

 private:
  const Model* model_;
  LocalFrame frame_;
  int m_;
  Matrix p_;  // local = p_ * global
};

}  // namespace imexilw
