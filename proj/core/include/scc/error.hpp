#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scc {

enum class ErrorCode {
  // parsing
  ParseError,
  UnknownKeyword,
  UnknownType,
  ScenarioParseError,
  // lookups
  NotFound,
  WrongKind,
  BadName,
  BadDimensions,
  // runtime lifecycle
  InvalidSpec,
  UndeclaredComponent,
  DuplicateImplementation,
  DuplicateBinding,
  Sealed,
  Unsealed,
  MissingImplementation,
  MissingBinding,
  SealCycle,
  RuntimeFaulted,
  // dispatch
  TypeMismatch,
  ContractViolation,
  NoContinuationCalled,
  DoubleContinuation,
  PullBeforeValue,
  ImplementationPanic,
  StaleHandle,
};

/// Stable upper-snake spelling, e.g. "PULL_BEFORE_VALUE".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string component = {},
        std::vector<std::string> names = {});

  ErrorCode code() const noexcept { return code_; }
  /// Component the failure is attributed to; empty when not applicable.
  const std::string& component() const noexcept { return component_; }
  /// Offending names for list-valued errors (MISSING_IMPLEMENTATION etc).
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string component_;
  std::vector<std::string> names_;
  std::string detail_;
};

/// Positioned error raised by the declaration and scenario parsers.
/// Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::string message, std::string origin,
             std::size_t line, std::size_t column);

  const std::string& origin() const noexcept { return origin_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string origin_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace scc
