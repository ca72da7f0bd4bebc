#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "imexilw/model.hpp"
#include "imexilw/oracle.hpp"

namespace imexilw {

// Stage boundary values at the left end x = 0 of a scalar law under explicit SSP-RK3,
// produced by the boundary stage machinery when the time-level derivatives come from
// inverse Lax-Wendroff. The model must be a scalar law whose flux derivatives are
// signal.df and signal.ddf.
std::array<double, 3> ilw_stage_values(const Model& model, const BoundarySignal& signal, double t_n, double dt);

// Same for u_t + u_x = 0 with solution g(t - x), but with every derivative after the
// first taken from WENO extrapolation of exact stage samples at spacing dx, offset eta.
std::array<double, 3> weno_stage_values_linear(const BoundarySignal& signal, double t_n, double dt, double dx,
                                               double eta = 0.5);

struct OracleRow {
  double dt = 0.0;
  double ilw_linear = 0.0;      // max stage difference, ILW second derivative
  double weno_linear = 0.0;     // max stage difference, WENO second derivative
  double nonlinear_stage1 = 0.0;
  double nonlinear_stage2 = 0.0;
};

// Comparison over successive halvings of dt, with dx = dt / cfl for the WENO variant.
std::vector<OracleRow> oracle_study(int levels = 5, double dt0 = 0.1, double cfl = 0.8);
std::string format_oracle_study(const std::vector<OracleRow>& rows);

}  // namespace imexilw
