#include "pertinax/error.hpp"

namespace pertinax {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ConductorTooSmall: return "ConductorTooSmall";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::RedundantGenerator: return "RedundantGenerator";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::BadQMatrix: return "BadQMatrix";
    case ErrorCode::DegenerateQuotient: return "DegenerateQuotient";
    case ErrorCode::NotFiniteWithinBound: return "NotFiniteWithinBound";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::TrivialGroupRejected: return "TrivialGroupRejected";
    case ErrorCode::BadPair: return "BadPair";
    case ErrorCode::NotEigen: return "NotEigen";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotQCommuting: return "NotQCommuting";
    case ErrorCode::NotPertinent: return "NotPertinent";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::InsufficientDegrees: return "InsufficientDegrees";
    case ErrorCode::NeedsGKdim: return "NeedsGKdim";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UndeclaredIdentifier: return "UndeclaredIdentifier";
    case ErrorCode::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UndeclaredIdentifier:
    case ErrorCode::DuplicateIdentifier:
    case ErrorCode::UsageError:
    case ErrorCode::ConductorTooSmall:
      return true;
    default:
      return false;
  }
}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(error_code_name(code)) + ": " + message);
}

}  // namespace pertinax
