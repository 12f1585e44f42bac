#include "projsep/error.hpp"

namespace projsep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularBlend: return "SingularBlend";
    case ErrorKind::NonPositiveEigenvalue: return "NonPositiveEigenvalue";
    case ErrorKind::QExceedsP: return "QExceedsP";
    case ErrorKind::RankDeficientAfterRetries: return "RankDeficientAfterRetries";
    case ErrorKind::InternalError: return "InternalError";
    case ErrorKind::SingularAfterRidge: return "SingularAfterRidge";
    case ErrorKind::EmptyClass: return "EmptyClass";
    case ErrorKind::DegreesOfFreedomTooSmall: return "DegreesOfFreedomTooSmall";
    case ErrorKind::ConfigRejected: return "ConfigRejected";
    case ErrorKind::InsufficientRows: return "InsufficientRows";
    case ErrorKind::SingularEmbeddedCovariance: return "SingularEmbeddedCovariance";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
    case ErrorKind::MixedModes: return "MixedModes";
    case ErrorKind::SinkWriteFailure: return "SinkWriteFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownColumn: return "UnknownColumn";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, int dim)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      dim_(dim),
      detail_(message) {}

}  // namespace projsep
