#pragma once

// Abstract syntax of the Sense/Compute/Control declaration language.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace scc {

enum class DataType { Bool, Int, String, Picture };

std::string_view to_string(DataType type);
std::optional<DataType> parse_data_type(std::string_view text);

/// Case-sensitive identifier matching [A-Za-z][A-Za-z0-9_]*.
class ComponentName {
 public:
  /// Throws Error(BAD_NAME) when `text` is not a valid identifier.
  explicit ComponentName(std::string text);

  static bool is_valid(std::string_view text) noexcept;

  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const ComponentName&, const ComponentName&) = default;
  friend auto operator<=>(const ComponentName&, const ComponentName&) = default;

 private:
  std::string text_;
};

enum class PublishSpec { NoPublish, AlwaysPublish, MaybePublish };

/// Activated only when another component pulls from it.
struct WhenRequired {
  friend bool operator==(const WhenRequired&, const WhenRequired&) = default;
};

/// Activated by each publication of `trigger`.
struct WhenProvided {
  ComponentName trigger;
  friend bool operator==(const WhenProvided&, const WhenProvided&) = default;
};

using Activation = std::variant<WhenRequired, WhenProvided>;

struct InteractionContract {
  Activation activation;
  std::optional<ComponentName> get_target;
  PublishSpec publish = PublishSpec::NoPublish;

  bool when_required() const noexcept {
    return std::holds_alternative<WhenRequired>(activation);
  }
  /// Trigger name for when-provided contracts, nullptr otherwise.
  const ComponentName* trigger() const noexcept;

  friend bool operator==(const InteractionContract&,
                         const InteractionContract&) = default;
};

struct SourceDecl {
  ComponentName name;
  DataType out_type;
  friend bool operator==(const SourceDecl&, const SourceDecl&) = default;
};

struct ActionDecl {
  ComponentName name;
  DataType in_type;
  friend bool operator==(const ActionDecl&, const ActionDecl&) = default;
};

struct ContextDecl {
  ComponentName name;
  DataType out_type;
  InteractionContract contract;
  friend bool operator==(const ContextDecl&, const ContextDecl&) = default;
};

struct ControllerDecl {
  ComponentName name;
  ComponentName trigger;
  ComponentName action;
  friend bool operator==(const ControllerDecl&, const ControllerDecl&) = default;
};

enum class ComponentKind { Source, Action, Context, Controller };

std::string_view to_string(ComponentKind kind);

class Declaration {
 public:
  using Variant = std::variant<SourceDecl, ActionDecl, ContextDecl, ControllerDecl>;

  Declaration(SourceDecl d) : decl_(std::move(d)) {}
  Declaration(ActionDecl d) : decl_(std::move(d)) {}
  Declaration(ContextDecl d) : decl_(std::move(d)) {}
  Declaration(ControllerDecl d) : decl_(std::move(d)) {}

  const ComponentName& name() const noexcept;
  ComponentKind kind() const noexcept;
  const Variant& variant() const noexcept { return decl_; }

  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(&decl_);
  }

  friend bool operator==(const Declaration&, const Declaration&) = default;

 private:
  Variant decl_;
};

struct Specification {
  std::vector<Declaration> declarations;

  /// First declaration carrying `name`, or nullptr.
  const Declaration* find(const ComponentName& name) const noexcept;
  const Declaration* find(std::string_view name) const noexcept;

  friend bool operator==(const Specification&, const Specification&) = default;
};

/// Declared output type of a Source or Context.
/// Throws Error(NOT_FOUND) or Error(WRONG_KIND).
DataType output_type_of(const Specification& spec, const ComponentName& name);

}  // namespace scc

template <>
struct std::hash<scc::ComponentName> {
  std::size_t operator()(const scc::ComponentName& n) const noexcept {
    return std::hash<std::string>{}(n.str());
  }
};
