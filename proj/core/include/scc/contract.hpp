#pragma once

// Boundary contracts: the call signature each component implementation must
// accept, derived from its interaction contract. Parameter order is fixed:
// activation value, capability, continuations.

#include <optional>
#include <string>
#include <variant>

#include "scc/types.hpp"

namespace scc {

/// Zero-argument pull from `target`, yielding a `type` value.
struct GetCapability {
  ComponentName target;
  DataType type;
  friend bool operator==(const GetCapability&, const GetCapability&) = default;
};

/// One-argument command to action `target`; returns nothing.
struct DoCapability {
  ComponentName target;
  DataType type;
  friend bool operator==(const DoCapability&, const DoCapability&) = default;
};

using Capability = std::variant<GetCapability, DoCapability>;

struct NoContinuations {
  friend bool operator==(const NoContinuations&, const NoContinuations&) = default;
};
/// A single publish continuation.
struct PublishAlways {
  DataType type;
  friend bool operator==(const PublishAlways&, const PublishAlways&) = default;
};
/// Publish and no-publish continuations.
struct PublishMaybe {
  DataType type;
  friend bool operator==(const PublishMaybe&, const PublishMaybe&) = default;
};

using Continuations = std::variant<NoContinuations, PublishAlways, PublishMaybe>;

struct ReturnsValue {
  DataType type;
  friend bool operator==(const ReturnsValue&, const ReturnsValue&) = default;
};
struct ReturnsNothing {
  friend bool operator==(const ReturnsNothing&, const ReturnsNothing&) = default;
};
/// The body must leave through a continuation; falling off the end is an error.
struct NoReturn {
  friend bool operator==(const NoReturn&, const NoReturn&) = default;
};

using ResultKind = std::variant<ReturnsValue, ReturnsNothing, NoReturn>;

struct BoundaryContract {
  std::optional<DataType> activation;
  std::optional<Capability> capability;
  Continuations continuations = NoContinuations{};
  ResultKind result = ReturnsNothing{};

  bool publishes() const noexcept {
    return !std::holds_alternative<NoContinuations>(continuations);
  }
  const GetCapability* get() const noexcept {
    return capability ? std::get_if<GetCapability>(&*capability) : nullptr;
  }
  const DoCapability* command() const noexcept {
    return capability ? std::get_if<DoCapability>(&*capability) : nullptr;
  }

  friend bool operator==(const BoundaryContract&, const BoundaryContract&) = default;
};

/// Throws Error(NOT_FOUND) for undeclared names and Error(WRONG_KIND) for
/// sources and actions. Assumes `spec` validates.
BoundaryContract derive_contract(const Specification& spec, const ComponentName& name);

/// Arrow notation, e.g. `(-> picture? (-> string?) (-> picture? void?) (-> void?) none/c)`.
std::string render_contract(const BoundaryContract& contract);

}  // namespace scc
