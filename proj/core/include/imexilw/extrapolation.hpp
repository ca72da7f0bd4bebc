#pragma once

#include <array>

#include "imexilw/types.hpp"

namespace imexilw {

inline constexpr double kExtrapolationEpsilon = 1e-6;

// Nonlinear weights follow the smoothness indicators; linear weights use d_r directly,
// which is the choice for data known to be smooth on the stencil.
enum class ExtrapolationWeights { Nonlinear, Linear };

struct ExtrapolationOptions {
  ExtrapolationWeights weights = ExtrapolationWeights::Nonlinear;
  double epsilon = kExtrapolationEpsilon;
};

// Three uniformly spaced nodes first, first + spacing, first + 2 spacing
// (spacing may be negative) and the point extrapolated to.
struct ExtrapolationStencil {
  double first = 0.0;
  double spacing = 1.0;
  double target = 0.0;
};

struct SmoothnessIndicators {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
};

struct ExtrapolationResult {
  std::array<double, 3> derivatives{};  // V*(0), V*(1), V*(2)
  std::array<double, 3> weights{};
};

SmoothnessIndicators smoothness_indicators(const std::array<double, 3>& v, double dx);

ExtrapolationResult weno_extrapolate(const std::array<double, 3>& v, const ExtrapolationStencil& stencil,
                                     const ExtrapolationOptions& options = {});

double weno_extrapolate(const std::array<double, 3>& v, const ExtrapolationStencil& stencil, int k,
                        const ExtrapolationOptions& options = {});

// Component-wise extrapolation of vector data; derivative k of each component.
State weno_extrapolate(const std::array<State, 3>& v, const ExtrapolationStencil& stencil, int k,
                       const ExtrapolationOptions& options = {});

}  // namespace imexilw
