#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nearspace {

enum class ErrorCode {
  NonPrime,
  NotPrimePower,
  CapExceeded,
  InternalError,
  ZeroInverse,
  ZeroArgument,
  NotDicksonPair,
  FullyDistributive,
  DimMismatch,
  PivotZero,
  TriplePreconditionViolated,
  TripleInvalid,
  BadRange,
  SyntaxError,
  DegreeTooHigh,
  NotDirect,
  CertificateMismatch,
};

/// Stable machine-readable name, used by the CLI and JSON error output.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nearspace
