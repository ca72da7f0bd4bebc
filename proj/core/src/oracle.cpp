#include "imexilw/oracle.hpp"

#include <sstream>

#include "imexilw/error.hpp"

namespace imexilw {

std::array<double, 3> carpenter_linear(const BoundarySignal& signal, double t_n, double dt) {
  const double g = signal.g(t_n);
  const double dg = signal.dg(t_n);
  const double ddg = signal.ddg ? signal.ddg(t_n) : 0.0;
  return {g, g + dt * dg, g + 0.5 * dt * dg + 0.25 * dt * dt * ddg};
}

std::array<double, 3> carpenter_nonlinear(const BoundarySignal& signal, double t_n, double dt) {
  const double g = signal.g(t_n);
  const double dg = signal.dg(t_n);
  const double ddg = signal.ddg ? signal.ddg(t_n) : 0.0;
  const double f1 = signal.df(g);
  if (!(f1 > 0.0)) {
    std::ostringstream msg;
    msg << "f'(g) = " << f1 << " is not an inflow speed";
    throw Error(ErrorCode::NonInflowBoundary, msg.str());
  }
  const double f2 = signal.ddf ? signal.ddf(g) : 0.0;
  const double u1 = g + dt * dg;
  const double f1_stage = signal.df(u1);
  const double u2 = g + 0.25 * dt * (1.0 + f1_stage / f1) * dg +
                    0.25 * dt * dt * f1_stage * (f1 * ddg - f2 * dg * dg) / (f1 * f1);
  return {g, u1, u2};
}

}  // namespace imexilw
