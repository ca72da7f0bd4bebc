#pragma once

#include <array>
#include <functional>

namespace imexilw {

// Boundary data u(t, 0) = g(t) and, for nonlinear laws, the flux derivatives.
struct BoundarySignal {
  std::function<double(double)> g;
  std::function<double(double)> dg;
  std::function<double(double)> ddg;
  std::function<double(double)> df;
  std::function<double(double)> ddf;
};

// Boundary values consistent with the stages of explicit SSP-RK3 for u_t + u_x = 0.
std::array<double, 3> carpenter_linear(const BoundarySignal& signal, double t_n, double dt);

// Same for u_t + f(u)_x = 0 with f'(g) > 0.
std::array<double, 3> carpenter_nonlinear(const BoundarySignal& signal, double t_n, double dt);

}  // namespace imexilw
