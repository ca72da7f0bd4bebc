#include "imexilw/extrapolation.hpp"

#include <cmath>
#include <sstream>

#include "imexilw/error.hpp"

namespace imexilw {

namespace {

struct Quadratic {
  double a = 0.0;  // coefficient of xi
  double b = 0.0;  // coefficient of xi^2
};

// p2(xi) = v0 + a xi + b xi^2 through xi = 0, 1, 2
Quadratic quadratic(const std::array<double, 3>& v) {
  return {(-3.0 * v[0] + 4.0 * v[1] - v[2]) / 2.0, (v[2] - 2.0 * v[1] + v[0]) / 2.0};
}

void check_spacing(double dx) {
  if (!(dx > 0.0) || !(dx < 0.5)) {
    std::ostringstream msg;
    msg << "extrapolation spacing must lie in (0, 0.5), got " << dx;
    throw Error(ErrorCode::InvalidSpacing, msg.str());
  }
}

}  // namespace

SmoothnessIndicators smoothness_indicators(const std::array<double, 3>& v, double dx) {
  const Quadratic p = quadratic(v);
  const double d1 = v[1] - v[0];
  return {dx * dx, d1 * d1, p.a * p.a - 2.0 * p.a * p.b + (16.0 / 3.0) * p.b * p.b};
}

ExtrapolationResult weno_extrapolate(const std::array<double, 3>& v, const ExtrapolationStencil& stencil,
                                     const ExtrapolationOptions& options) {
  const double h = stencil.spacing;
  const double dx = std::abs(h);
  check_spacing(dx);
  const SmoothnessIndicators beta = smoothness_indicators(v, dx);
  const double d[3] = {dx * dx, dx, 1.0 - dx - dx * dx};
  const double b[3] = {beta.beta0, beta.beta1, beta.beta2};
  double alpha[3];
  double sum = 0.0;
  for (int r = 0; r < 3; ++r) {
    const double e = options.epsilon + b[r];
    alpha[r] = options.weights == ExtrapolationWeights::Linear ? d[r] : d[r] / (e * e);
    sum += alpha[r];
  }

  const double xi = (stencil.target - stencil.first) / h;
  const Quadratic p = quadratic(v);
  const double d1 = v[1] - v[0];
  const double p0[3] = {v[0], 0.0, 0.0};
  const double p1[3] = {v[0] + d1 * xi, d1 / h, 0.0};
  const double p2[3] = {v[0] + p.a * xi + p.b * xi * xi, (p.a + 2.0 * p.b * xi) / h, 2.0 * p.b / (h * h)};

  ExtrapolationResult out;
  for (int r = 0; r < 3; ++r) out.weights[static_cast<std::size_t>(r)] = alpha[r] / sum;
  const auto& w = out.weights;
  for (int k = 0; k < 3; ++k) {
    out.derivatives[static_cast<std::size_t>(k)] = w[0] * p0[k] + w[1] * p1[k] + w[2] * p2[k];
  }
  return out;
}

double weno_extrapolate(const std::array<double, 3>& v, const ExtrapolationStencil& stencil, int k,
                        const ExtrapolationOptions& options) {
  return weno_extrapolate(v, stencil, options).derivatives.at(static_cast<std::size_t>(k));
}

State weno_extrapolate(const std::array<State, 3>& v, const ExtrapolationStencil& stencil, int k,
                       const ExtrapolationOptions& options) {
  const auto m = v[0].size();
  State out(m);
  for (Eigen::Index c = 0; c < m; ++c) {
    out(c) = weno_extrapolate({v[0](c), v[1](c), v[2](c)}, stencil, k, options);
  }
  return out;
}

}  // namespace imexilw
