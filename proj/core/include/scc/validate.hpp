#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scc/types.hpp"

namespace scc {

enum class DiagCode {
  DupName,
  UnresolvedRef,
  PullNotRequired,
  BadPublishSpec,
  GetCycle,
  BadTriggerKind,
};

std::string_view to_string(DiagCode code);

struct Diagnostic {
  std::size_t index;  // position of the offending declaration
  DiagCode code;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using ValidationReport = std::vector<Diagnostic>;

/// Checks every well-formedness rule of a specification. The report is empty
/// iff the specification is valid; diagnostics are ordered by declaration
/// index, then by the order the rules are listed in DiagCode.
///
/// Name references resolve to the first declaration carrying that name.
/// A reference of the wrong kind (a controller triggered by a source, a get
/// from an action, ...) yields BAD_TRIGGER_KIND, except that a get from a
/// when-provided context yields PULL_NOT_REQUIRED. Every when-required
/// context on a cycle of the get relation receives its own GET_CYCLE.
ValidationReport validate(const Specification& spec);

}  // namespace scc
