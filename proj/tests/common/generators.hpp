#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "imexilw/model.hpp"

namespace imexilw::testing {

inline constexpr int kPropertyCases = 100;

// Seeded draws of admissible states and directions for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  State scalar(double lo, double hi) {
    State s(1);
    s(0) = uniform(lo, hi);
    return s;
  }

  State pair(double lo, double hi) {
    State s(2);
    s << uniform(lo, hi), uniform(lo, hi);
    return s;
  }

  // 1 + u + v stays in [0.2, 3] so the nonlinear relaxation system is hyperbolic.
  State nonlinear_relax_state() {
    const double s = uniform(-0.8, 2.0);
    const double u = uniform(-2.0, 2.0);
    State r(2);
    r << u, s - u;
    return r;
  }

  Primitive euler_primitive() {
    Primitive w;
    w.rho = uniform(0.2, 5.0);
    w.u = uniform(-3.0, 3.0);
    w.v = uniform(-3.0, 3.0);
    w.p = uniform(0.5, 80.0);
    w.Y = uniform(0.0, 1.0);
    return w;
  }

  Direction direction() {
    const double theta = uniform(0.0, 2.0 * std::numbers::pi);
    return {std::cos(theta), std::sin(theta)};
  }

  Direction axis() {
    switch (integer(0, 3)) {
      case 0: return {1.0, 0.0};
      case 1: return {-1.0, 0.0};
      case 2: return {0.0, 1.0};
      default: return {0.0, -1.0};
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace imexilw::testing
