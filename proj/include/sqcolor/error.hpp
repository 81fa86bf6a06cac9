#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqcolor {

enum class ErrorCode {
  IndexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  EmptySet,
  KMaxTooLarge,
  InvalidRotation,
  NotConnected,
  NotPlanarEmbedding,
  TooLarge,
  DegreeCapExceeded,
  OrderMismatch,
  InvalidList,
  InvalidSizeVector,
  SearchBudgetExceeded,
  InvalidConfiguration,
  ScriptMissing,
  PreconditionViolated,
  EulerMismatch,
  HypothesisViolated,
  OutOfRange,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::KMaxTooLarge: return "KMaxTooLarge";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::InvalidList: return "InvalidList";
    case ErrorCode::InvalidSizeVector: return "InvalidSizeVector";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::ScriptMissing: return "ScriptMissing";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::EulerMismatch: return "EulerMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sqcolor
