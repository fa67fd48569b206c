#include "scc/types.hpp"

#include "scc/error.hpp"

namespace scc {

std::string_view to_string(DataType type) {
  switch (type) {
    case DataType::Bool: return "Bool";
    case DataType::Int: return "Int";
    case DataType::String: return "String";
    case DataType::Picture: return "Picture";
  }
  return "?";
}

std::optional<DataType> parse_data_type(std::string_view text) {
  if (text == "Bool") return DataType::Bool;
  if (text == "Int") return DataType::Int;
  if (text == "String") return DataType::String;
  if (text == "Picture") return DataType::Picture;
  return std::nullopt;
}

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Source: return "source";
    case ComponentKind::Action: return "action";
    case ComponentKind::Context: return "context";
    case ComponentKind::Controller: return "controller";
  }
  return "?";
}

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

ComponentName::ComponentName(std::string text) : text_(std::move(text)) {
  if (!is_valid(text_)) {
    throw Error(ErrorCode::BadName, "invalid component name '" + text_ + "'");
  }
}

bool ComponentName::is_valid(std::string_view text) noexcept {
  if (text.empty() || !is_alpha(text.front())) return false;
  for (char c : text) {
    if (!is_alpha(c) && !is_digit(c) && c != '_') return false;
  }
  return true;
}

const ComponentName* InteractionContract::trigger() const noexcept {
  if (const auto* p = std::get_if<WhenProvided>(&activation)) return &p->trigger;
  return nullptr;
}

const ComponentName& Declaration::name() const noexcept {
  return std::visit([](const auto& d) -> const ComponentName& { return d.name; },
                    decl_);
}

ComponentKind Declaration::kind() const noexcept {
  return static_cast<ComponentKind>(decl_.index());
}

const Declaration* Specification::find(const ComponentName& name) const noexcept {
  return find(std::string_view(name.str()));
}

const Declaration* Specification::find(std::string_view name) const noexcept {
  for (const auto& d : declarations) {
    if (d.name().str() == name) return &d;
  }
  return nullptr;
}

DataType output_type_of(const Specification& spec, const ComponentName& name) {
  const Declaration* d = spec.find(name);
  if (d == nullptr) {
    throw Error(ErrorCode::NotFound, "'" + name.str() + "' is not declared");
  }
  if (const auto* s = d->as<SourceDecl>()) return s->out_type;
  if (const auto* c = d->as<ContextDecl>()) return c->out_type;
  throw Error(ErrorCode::WrongKind, "'" + name.str() + "' is " +
                                        std::string(to_string(d->kind())) +
                                        ", which has no output type");
}

}  // namespace scc
