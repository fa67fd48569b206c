#include "scc/error.hpp"

#include <utility>

namespace scc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownKeyword: return "UNKNOWN_KEYWORD";
    case ErrorCode::UnknownType: return "UNKNOWN_TYPE";
    case ErrorCode::ScenarioParseError: return "SCENARIO_PARSE_ERROR";
    case ErrorCode::NotFound: return "NOT_FOUND";
    case ErrorCode::WrongKind: return "WRONG_KIND";
    case ErrorCode::BadName: return "BAD_NAME";
    case ErrorCode::BadDimensions: return "BAD_DIMENSIONS";
    case ErrorCode::InvalidSpec: return "INVALID_SPEC";
    case ErrorCode::UndeclaredComponent: return "UNDECLARED_COMPONENT";
    case ErrorCode::DuplicateImplementation: return "DUPLICATE_IMPLEMENTATION";
    case ErrorCode::DuplicateBinding: return "DUPLICATE_BINDING";
    case ErrorCode::Sealed: return "SEALED";
    case ErrorCode::Unsealed: return "UNSEALED";
    case ErrorCode::MissingImplementation: return "MISSING_IMPLEMENTATION";
    case ErrorCode::MissingBinding: return "MISSING_BINDING";
    case ErrorCode::SealCycle: return "SEAL_CYCLE";
    case ErrorCode::RuntimeFaulted: return "RUNTIME_FAULTED";
    case ErrorCode::TypeMismatch: return "TYPE_MISMATCH";
    case ErrorCode::ContractViolation: return "CONTRACT_VIOLATION";
    case ErrorCode::NoContinuationCalled: return "NO_CONTINUATION_CALLED";
    case ErrorCode::DoubleContinuation: return "DOUBLE_CONTINUATION";
    case ErrorCode::PullBeforeValue: return "PULL_BEFORE_VALUE";
    case ErrorCode::ImplementationPanic: return "IMPLEMENTATION_PANIC";
    case ErrorCode::StaleHandle: return "STALE_HANDLE";
  }
  return "UNKNOWN";
}

namespace {

std::string compose(ErrorCode code, const std::string& component,
                    const std::string& message) {
  std::string out(to_string(code));
  if (!component.empty()) out += " in " + component;
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, std::string component,
             std::vector<std::string> names)
    : std::runtime_error(compose(code, component, message)),
      code_(code),
      component_(std::move(component)),
      names_(std::move(names)),
      detail_(std::move(message)) {}

ParseError::ParseError(ErrorCode code, std::string message, std::string origin,
                       std::size_t line, std::size_t column)
    : Error(code, std::move(message)),
      origin_(std::move(origin)),
      line_(line),
      column_(column) {}

}  // namespace scc
