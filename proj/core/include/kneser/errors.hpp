#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kneser {

enum class ErrorKind {
  BoundExceeded,
  EmptyOperand,
  ZeroMeasureStructuringElement,
  GroupMismatch,
  DegenerateFiber,
  NotCompactOpen,
  PreconditionNotSubcritical,
  PreconditionViolation,
  PreconditionAperiodicity,
  ClassificationIncomplete,
  PrimeMismatch,
  SyntaxError,
  SemanticError,
  EvaluationError,
  BudgetExceeded,
  InvalidArgument,
  InvariantViolation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

// Internal consistency assertion; throws InvariantViolation instead of aborting.
inline void ensure(bool condition, const char* what) {
  if (!condition) fail(ErrorKind::InvariantViolation, what);
}

}  // namespace kneser
