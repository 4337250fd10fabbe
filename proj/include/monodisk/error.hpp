#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monodisk {

enum class ErrorCode {
  NotClosed,
  InvalidN,
  InvalidK,
  GrooveOutOfRange,
  SelfIntersection,
  InadmissibleEndpoint,
  PathCollision,
  NotSymmetric,
  SubdivisionCollision,
  SideSelfIntersects,
  RotationOverlap,
  WordInvalid,
  NotCFamily,
  UnrecognizedSpan,
  BothZero,
  TooLarge,
  TooMany,
  UnsupportedN,
  CriticalOnlyForN3,
  FitInconsistent,
  NonInteger,
  SchemaViolation,
  VersionUnsupported,
  Io,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. The code is stable and
/// is what the CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace monodisk
