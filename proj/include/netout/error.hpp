#pragma once

#include <stdexcept>
#include <string>

namespace netout {

enum class ErrorKind {
  MissingNode,
  TypeConflict,
  ParseError,
  QueryParseError,
  TypeMismatch,
  PatternMismatch,
  InvalidReference,
  DegenerateBase,
  PathCountOverflow,
  OracleBoundExceeded,
  EmptyInput,
  FrozenGraph,
};

const char* error_kind_name(ErrorKind kind);

/// Single exception type carrying a machine-checkable kind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingNode: return "MissingNode";
    case ErrorKind::TypeConflict: return "TypeConflict";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::QueryParseError: return "QueryParseError";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::InvalidReference: return "InvalidReference";
    case ErrorKind::DegenerateBase: return "DegenerateBase";
    case ErrorKind::PathCountOverflow: return "PathCountOverflow";
    case ErrorKind::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::FrozenGraph: return "FrozenGraph";
  }
  return "Error";
}

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace netout
