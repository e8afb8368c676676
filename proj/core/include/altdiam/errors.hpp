#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace altdiam {

enum class ErrorCode {
  DuplicateSource,
  MissingSource,
  RangeViolation,
  NotInjective,
  DimensionMismatch,
  UnsupportedWord,
  NotBalanced,
  NoPerfectMatching,
  NotPrime,
  NotInvertible,
  FieldTooLarge,
  InstanceTooLarge,
  InvalidPoset,
  InvalidInput,
  ConsistencyViolation,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateSource: return "DuplicateSource";
    case ErrorCode::MissingSource: return "MissingSource";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedWord: return "UnsupportedWord";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::InvalidPoset: return "InvalidPoset";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
  }
  return "UnknownError";
}

/// Domain error. The code tells callers (and the CLI exit path) what went
/// wrong; the message names the offending point, value or cell.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a bipartite matching instance has no perfect matching.
/// Carries a certifying violator: a set S of rows with |neighborhood(S)| < |S|.
class NoPerfectMatchingError : public Error {
 public:
  NoPerfectMatchingError(std::vector<int> violator_rows, const std::string& message)
      : Error(ErrorCode::NoPerfectMatching, message),
        violator_rows_(std::move(violator_rows)) {}

  const std::vector<int>& violator_rows() const { return violator_rows_; }

 private:
  std::vector<int> violator_rows_;
};

}  // namespace altdiam
