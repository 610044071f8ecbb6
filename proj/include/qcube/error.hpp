#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcube {

enum class ErrorCode {
  DimensionMismatch,
  DimensionTooLarge,
  BadDimension,
  GroupTooLarge,
  IdentityElement,
  Unsupported,
  NotBipartite,
  NotConnected,
  TooLarge,
  NotRectagraph,
  QuadrangleAmbiguous,
  InconsistentLift,
  NotCovering,
  ReconstructionFailed,
  PreconditionViolated,
  UnknownExample,
  UnknownClaim,
  ParseError,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every library failure is reported through this exception; `code()` is the
/// machine-readable part, `what()` the human-readable one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qcube
