#include "imexilw/error.hpp"

namespace imexilw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TriangularityViolation: return "TriangularityViolation";
    case ErrorCode::AbscissaMismatch: return "AbscissaMismatch";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorCode::InadmissibleState: return "InadmissibleState";
    case ErrorCode::NonphysicalState: return "NonphysicalState";
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::InvalidEta: return "InvalidEta";
    case ErrorCode::InvalidSpacing: return "InvalidSpacing";
    case ErrorCode::GeometryOverlap: return "GeometryOverlap";
    case ErrorCode::ObstacleOutsideDomain: return "ObstacleOutsideDomain";
    case ErrorCode::MissingGhostData: return "MissingGhostData";
    case ErrorCode::MissingStencil: return "MissingStencil";
    case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorCode::NewtonDivergence: return "NewtonDivergence";
    case ErrorCode::SingularBoundaryJacobian: return "SingularBoundaryJacobian";
    case ErrorCode::SingularILWSystem: return "SingularILWSystem";
    case ErrorCode::SingularStageMatrix: return "SingularStageMatrix";
    case ErrorCode::NonInflowBoundary: return "NonInflowBoundary";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::TriangularityViolation:
    case ErrorCode::AbscissaMismatch:
    case ErrorCode::InvalidTableau:
    case ErrorCode::NonpositiveEpsilon:
    case ErrorCode::ConfigError:
      return ErrorCategory::Config;
    case ErrorCode::TooFewNodes:
    case ErrorCode::InvalidEta:
    case ErrorCode::InvalidSpacing:
    case ErrorCode::GeometryOverlap:
    case ErrorCode::ObstacleOutsideDomain:
    case ErrorCode::MissingStencil:
      return ErrorCategory::Geometry;
    case ErrorCode::IoError:
      return ErrorCategory::Io;
    default:
      return ErrorCategory::Numerical;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

}  // namespace imexilw
