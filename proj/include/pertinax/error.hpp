#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pertinax {

enum class ErrorCode {
  // arithmetic
  DivisionByZero,
  ConductorTooSmall,
  FieldMismatch,
  // presentations and Groebner bases
  NotGraded,
  RedundantGenerator,
  TruncationExceeded,
  BadQMatrix,
  DegenerateQuotient,
  // groups
  NotFiniteWithinBound,
  NotAnAutomorphism,
  TrivialGroupRejected,
  // pertinent sequences
  BadPair,
  NotEigen,
  NotCentral,
  NotQCommuting,
  NotPertinent,
  BadInput,
  // dimension
  InsufficientDegrees,
  NeedsGKdim,
  // script front end
  SyntaxError,
  UndeclaredIdentifier,
  DuplicateIdentifier,
  UsageError,
};

std::string_view error_code_name(ErrorCode code);

/// Usage errors (bad script, bad flags) as opposed to mathematical failures.
bool is_usage_error(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace pertinax
