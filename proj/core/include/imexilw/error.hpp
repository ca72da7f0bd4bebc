#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace imexilw {

enum class ErrorCode {
  TriangularityViolation,
  AbscissaMismatch,
  InvalidTableau,
  NonpositiveEpsilon,
  InadmissibleState,
  NonphysicalState,
  TooFewNodes,
  InvalidEta,
  InvalidSpacing,
  GeometryOverlap,
  ObstacleOutsideDomain,
  MissingGhostData,
  MissingStencil,
  ZeroEigenvalue,
  NewtonDivergence,
  SingularBoundaryJacobian,
  SingularILWSystem,
  SingularStageMatrix,
  NonInflowBoundary,
  ConfigError,
  IoError,
};

enum class ErrorCategory { Config, Geometry, Numerical, Io };

std::string_view to_string(ErrorCode code);
ErrorCategory category_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace imexilw
