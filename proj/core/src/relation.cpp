#include "imexilw/relation.hpp"

namespace imexilw {

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Characteristic: return "characteristic";
    case BoundaryKind::Periodic: return "periodic";
    case BoundaryKind::OutflowCopy: return "outflow_copy";
    case BoundaryKind::PrescribedState: return "prescribed_state";
  }
  return "unknown";
}

BoundaryRelation extrapolation_relation() {
  BoundaryRelation r;
  r.kind = BoundaryKind::Characteristic;
  r.count = 0;
  r.value = [](const State&, double) { return State(0); };
  r.jacobian = [](const State& u, double) { return Matrix(0, u.size()); };
  r.time_derivative = [](const State&, double) { return State(0); };
  return r;
}

BoundaryRelation prescribe_component(int component, int m, std::function<double(double)> g,
                                     std::function<double(double)> dg) {
  BoundaryRelation r;
  r.kind = BoundaryKind::Characteristic;
  r.count = 1;
  r.value = [component, g](const State& u, double t) {
    State b(1);
    b(0) = u(component) - g(t);
    return b;
  };
  r.jacobian = [component, m](const State&, double) {
    Matrix j = Matrix::Zero(1, m);
    j(0, component) = 1.0;
    return j;
  };
  r.time_derivative = [dg](const State&, double t) {
    State b(1);
    b(0) = -dg(t);
    return b;
  };
  return r;
}

BoundaryRelation wall_relation(int m) {
  BoundaryRelation r;
  r.kind = BoundaryKind::Characteristic;
  r.count = 1;
  r.value = [](const State& u, double) {
    State b(1);
    b(0) = u(1);
    return b;
  };
  r.jacobian = [m](const State&, double) {
    Matrix j = Matrix::Zero(1, m);
    j(0, 1) = 1.0;
    return j;
  };
  r.time_derivative = [](const State&, double) { return State::Zero(1); };
  return r;
}

BoundaryRelation prescribed_state_relation(const State& u_in) {
  BoundaryRelation r;
  r.kind = BoundaryKind::PrescribedState;
  const auto m = u_in.size();
  r.count = static_cast<int>(m);
  r.prescribed = u_in;
  r.value = [u_in](const State& u, double) { return State(u - u_in); };
  r.jacobian = [m](const State&, double) { return Matrix(Matrix::Identity(m, m)); };
  r.time_derivative = [m](const State&, double) { return State(State::Zero(m)); };
  return r;
}

BoundaryRelation periodic_relation() {
  BoundaryRelation r;
  r.kind = BoundaryKind::Periodic;
  return r;
}

BoundaryRelation outflow_copy_relation() {
  BoundaryRelation r;
  r.kind = BoundaryKind::OutflowCopy;
  return r;
}

}  // namespace imexilw
