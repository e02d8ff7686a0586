#include "kneser/errors.hpp"

namespace kneser {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::EmptyOperand: return "EmptyOperand";
    case ErrorKind::ZeroMeasureStructuringElement: return "ZeroMeasureStructuringElement";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::DegenerateFiber: return "DegenerateFiber";
    case ErrorKind::NotCompactOpen: return "NotCompactOpen";
    case ErrorKind::PreconditionNotSubcritical: return "PreconditionNotSubcritical";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::PreconditionAperiodicity: return "PreconditionAperiodicity";
    case ErrorKind::ClassificationIncomplete: return "ClassificationIncomplete";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::EvaluationError: return "EvaluationError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace kneser
