#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "generators.hpp"
#include "imexilw/error.hpp"
#include "imexilw/extrapolation.hpp"

namespace imexilw {
namespace {

using testing::Gen;
using testing::kPropertyCases;

// Derivative of order k at x of the Lagrange polynomial through (xs[i], vs[i]), i < n.
double lagrange_derivative(const double* xs, const double* vs, int n, double x, int k) {
  if (n == 1) return k == 0 ? vs[0] : 0.0;
  if (n == 2) {
    const double slope = (vs[1] - vs[0]) / (xs[1] - xs[0]);
    return k == 0 ? vs[0] + slope * (x - xs[0]) : (k == 1 ? slope : 0.0);
  }
  // Newton form for three nodes
  const double d01 = (vs[1] - vs[0]) / (xs[1] - xs[0]);
  const double d12 = (vs[2] - vs[1]) / (xs[2] - xs[1]);
  const double d012 = (d12 - d01) / (xs[2] - xs[0]);
  if (k == 0) return vs[0] + d01 * (x - xs[0]) + d012 * (x - xs[0]) * (x - xs[1]);
  if (k == 1) return d01 + d012 * ((x - xs[0]) + (x - xs[1]));
  return 2.0 * d012;
}

// Five-point Gauss-Legendre on [a, b], exact for degree 9.
double gauss_legendre(const std::function<double(double)>& f, double a, double b) {
  static const double nodes[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                  0.9061798459386640};
  static const double weights[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                    0.2369268850561891, 0.2369268850561891};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) sum += weights[i] * f(mid + half * nodes[i]);
  return half * sum;
}

// beta_r from its defining integral over [x_{-1}, x_0] in physical coordinates.
double beta_by_quadrature(const std::array<double, 3>& v, double dx, int r) {
  const double xs[3] = {0.0, dx, 2.0 * dx};
  double total = 0.0;
  for (int l = 1; l <= r; ++l) {
    const auto integrand = [&](double x) {
      const double d = lagrange_derivative(xs, v.data(), r + 1, x, l);
      return std::pow(dx, 2 * l - 1) * d * d;
    };
    total += gauss_legendre(integrand, -dx, 0.0);
  }
  return total;
}

TEST(Extrapolation, SmoothnessIndicatorsMatchQuadrature) {
  Gen g(31);
  for (int k = 0; k < kPropertyCases; ++k) {
    const std::array<double, 3> v = {g.uniform(-5.0, 5.0), g.uniform(-5.0, 5.0), g.uniform(-5.0, 5.0)};
    const double dx = g.uniform(1e-3, 0.4);
    const SmoothnessIndicators b = smoothness_indicators(v, dx);
    EXPECT_DOUBLE_EQ(b.beta0, dx * dx);
    for (int r : {1, 2}) {
      const double closed = r == 1 ? b.beta1 : b.beta2;
      const double quad = beta_by_quadrature(v, dx, r);
      EXPECT_NEAR(closed, quad, 1e-12 * std::max(1.0, std::abs(quad))) << "r = " << r << " case " << k;
    }
  }
}

TEST(Extrapolation, IndicatorExamples) {
  const SmoothnessIndicators c = smoothness_indicators({5.0, 5.0, 5.0}, 0.1);
  EXPECT_EQ(c.beta1, 0.0);
  EXPECT_EQ(c.beta2, 0.0);
  const SmoothnessIndicators l = smoothness_indicators({1.0, 1.3, 1.6}, 0.1);
  EXPECT_NEAR(l.beta1, 0.09, 1e-15);
  const SmoothnessIndicators j = smoothness_indicators({0.0, 0.0, 1.0}, 0.05);
  EXPECT_GT(j.beta2, 100.0 * j.beta1 + 0.1);
}

TEST(Extrapolation, ConstantDataIsReproduced) {
  for (double h : {0.1, -0.05}) {
    const ExtrapolationResult r = weno_extrapolate({5.0, 5.0, 5.0}, {0.3, h, 0.0});
    EXPECT_NEAR(r.derivatives[0], 5.0, 1e-14);
    EXPECT_NEAR(r.derivatives[1], 0.0, 1e-12);
    EXPECT_NEAR(r.derivatives[2], 0.0, 1e-10);
  }
}

TEST(Extrapolation, WeightsFormPartitionOfUnity) {
  Gen g(32);
  for (int k = 0; k < kPropertyCases; ++k) {
    const std::array<double, 3> v = {g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0)};
    const double dx = g.uniform(1e-3, 0.2);
    const ExtrapolationResult r = weno_extrapolate(v, {0.5 * dx, dx, 0.0});
    double sum = 0.0;
    for (double w : r.weights) {
      EXPECT_GE(w, 0.0);
      sum += w;
    }
    EXPECT_NEAR(sum, 1.0, 1e-14);
  }
}

TEST(Extrapolation, QuadraticSecondDerivative) {
  const double dx = 0.01;
  std::array<double, 3> v{};
  for (int j = 0; j < 3; ++j) {
    const double x = (j + 0.5) * dx;
    v[static_cast<std::size_t>(j)] = x * x;
  }
  EXPECT_NEAR(weno_extrapolate(v, {0.5 * dx, dx, 0.0}, 2), 2.0, 5e-2);
  ExtrapolationOptions linear;
  linear.weights = ExtrapolationWeights::Linear;
  EXPECT_NEAR(weno_extrapolate(v, {0.5 * dx, dx, 0.0}, 2, linear), 2.0 * (1.0 - dx - dx * dx), 1e-9);
}

TEST(Extrapolation, SmoothWeightsScaleWithSpacing) {
  for (double dx : {1e-2, 1e-3}) {
    std::array<double, 3> v{};
    for (int j = 0; j < 3; ++j) v[static_cast<std::size_t>(j)] = std::sin(1.0 + (j + 0.5) * dx);
    const ExtrapolationResult r = weno_extrapolate(v, {0.5 * dx, dx, 0.0});
    EXPECT_LT(r.weights[0] / (dx * dx), 10.0);
    EXPECT_LT(r.weights[1] / dx, 10.0);
  }
}

double fitted_slope(const std::vector<double>& h, const std::vector<double>& e) {
  const std::size_t n = h.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(e[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  return (static_cast<double>(n) * sxy - sx * sy) / (static_cast<double>(n) * sxx - sx * sx);
}

TEST(Extrapolation, OrderOfAccuracyOnSmoothData) {
  const double xb = 0.3;
  const auto f = [](double x) { return std::sin(2.0 * x) + std::exp(x); };
  const double exact[3] = {f(xb), 2.0 * std::cos(2.0 * xb) + std::exp(xb),
                           -4.0 * std::sin(2.0 * xb) + std::exp(xb)};
  for (double direction : {1.0, -1.0}) {
    for (auto weights : {ExtrapolationWeights::Nonlinear, ExtrapolationWeights::Linear}) {
      ExtrapolationOptions opts;
      opts.weights = weights;
      for (int k = 0; k < 3; ++k) {
        std::vector<double> hs;
        std::vector<double> errs;
        for (double dx = 0.02; dx > 0.0011; dx /= 2.0) {
          const double h = direction * dx;
          const double first = xb + 0.5 * h;
          const std::array<double, 3> v = {f(first), f(first + h), f(first + 2.0 * h)};
          hs.push_back(dx);
          errs.push_back(std::abs(weno_extrapolate(v, {first, h, xb}, k, opts) - exact[k]));
        }
        EXPECT_GE(fitted_slope(hs, errs), 2.7 - k) << "k = " << k << " direction " << direction;
      }
    }
  }
}

TEST(Extrapolation, DiscontinuityShiftsWeightAwayFromQuadratic) {
  const double dx = 0.05;
  const ExtrapolationResult r = weno_extrapolate({0.0, 0.0, 1.0}, {0.5 * dx, dx, 0.0});
  EXPECT_LT(r.weights[2], 0.5);
  EXPECT_NEAR(r.derivatives[0], 0.0, 0.05);
}

TEST(Extrapolation, VectorDataLoopsComponents) {
  State a(2), b(2), c(2);
  a << 1.0, 2.0;
  b << 1.0, 2.01;
  c << 1.0, 2.02;
  const State r = weno_extrapolate(std::array<State, 3>{a, b, c}, {0.05, 0.1, 0.0}, 0);
  EXPECT_NEAR(r(0), 1.0, 1e-14);
  EXPECT_NEAR(r(1), 1.995, 1e-7);
}

TEST(Extrapolation, RejectsLargeSpacing) {
  try {
    weno_extrapolate({0.0, 1.0, 2.0}, {0.0, 0.7, 0.0});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSpacing);
  }
}

}  // namespace
}  // namespace imexilw
