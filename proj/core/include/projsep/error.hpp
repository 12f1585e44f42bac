#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace projsep {

enum class ErrorKind {
  NotSquare,
  NotPositiveDefinite,
  DimensionMismatch,
  SingularBlend,
  NonPositiveEigenvalue,
  QExceedsP,
  RankDeficientAfterRetries,
  InternalError,
  SingularAfterRidge,
  EmptyClass,
  DegreesOfFreedomTooSmall,
  ConfigRejected,
  InsufficientRows,
  SingularEmbeddedCovariance,
  EmptyGrid,
  MixedModes,
  SinkWriteFailure,
  ParseError,
  UnknownColumn,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. `dim()` carries the offending matrix dimension
/// for the linear-algebra failures (SingularBlend, SingularEmbeddedCovariance,
/// NotPositiveDefinite) and -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int dim = -1);

  ErrorKind kind() const noexcept { return kind_; }
  int dim() const noexcept { return dim_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  int dim_;
  std::string detail_;
};

}  // namespace projsep
