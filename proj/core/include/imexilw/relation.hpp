#pragma once

#include <functional>
#include <string>

#include "imexilw/types.hpp"

namespace imexilw {

enum class BoundaryKind { Characteristic, Periodic, OutflowCopy, PrescribedState };

// Relations B(U, t) = 0 imposed at a boundary point, written in the local
// frame whose first axis is the outward normal.
struct BoundaryRelation {
  BoundaryKind kind = BoundaryKind::Characteristic;
  int count = 0;
  std::function<State(const State&, double)> value;
  std::function<Matrix(const State&, double)> jacobian;
  std::function<State(const State&, double)> time_derivative;
  State prescribed;

  bool uses_ghost_solver() const {
    return kind == BoundaryKind::Characteristic || kind == BoundaryKind::PrescribedState;
  }
};

std::string to_string(BoundaryKind kind);

// No relations: every characteristic is extrapolated.
BoundaryRelation extrapolation_relation();

// U_component(t) = g(t).
BoundaryRelation prescribe_component(int component, int m, std::function<double(double)> g,
                                     std::function<double(double)> dg);

// Normal momentum vanishes.
BoundaryRelation wall_relation(int m);

// U = u_in, with u_in given in the local frame.
BoundaryRelation prescribed_state_relation(const State& u_in);

BoundaryRelation periodic_relation();
BoundaryRelation outflow_copy_relation();

}  // namespace imexilw
