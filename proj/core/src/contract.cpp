#include "scc/contract.hpp"

#include <vector>

#include "scc/error.hpp"

namespace scc {

BoundaryContract derive_contract(const Specification& spec, const ComponentName& name) {
  const Declaration* decl = spec.find(name);
  if (decl == nullptr) {
    throw Error(ErrorCode::NotFound, "'" + name.str() + "' is not declared");
  }

  BoundaryContract out;
  if (const auto* ctx = decl->as<ContextDecl>()) {
    const InteractionContract& ic = ctx->contract;
    if (const ComponentName* trigger = ic.trigger()) {
      out.activation = output_type_of(spec, *trigger);
    }
    if (ic.get_target) {
      out.capability = GetCapability{*ic.get_target, output_type_of(spec, *ic.get_target)};
    }
    switch (ic.publish) {
      case PublishSpec::NoPublish:
        out.continuations = NoContinuations{};
        out.result = ReturnsValue{ctx->out_type};
        break;
      case PublishSpec::AlwaysPublish:
        out.continuations = PublishAlways{ctx->out_type};
        out.result = NoReturn{};
        break;
      case PublishSpec::MaybePublish:
        out.continuations = PublishMaybe{ctx->out_type};
        out.result = NoReturn{};
        break;
    }
    return out;
  }

  if (const auto* ctr = decl->as<ControllerDecl>()) {
    out.activation = output_type_of(spec, ctr->trigger);
    const Declaration* action = spec.find(ctr->action);
    const auto* act = action ? action->as<ActionDecl>() : nullptr;
    if (act == nullptr) {
      throw Error(ErrorCode::NotFound, "action '" + ctr->action.str() + "' is not declared");
    }
    out.capability = DoCapability{ctr->action, act->in_type};
    out.result = ReturnsNothing{};
    return out;
  }

  throw Error(ErrorCode::WrongKind, "'" + name.str() + "' is a " +
                                        std::string(to_string(decl->kind())) +
                                        "; only contexts and controllers have contracts");
}

namespace {

std::string predicate(DataType t) {
  switch (t) {
    case DataType::Bool: return "bool?";
    case DataType::Int: return "int?";
    case DataType::String: return "string?";
    case DataType::Picture: return "picture?";
  }
  return "any/c";
}

std::string sink_arrow(DataType t) { return "(-> " + predicate(t) + " void?)"; }

}  // namespace

std::string render_contract(const BoundaryContract& contract) {
  std::vector<std::string> parts;
  if (contract.activation) parts.push_back(predicate(*contract.activation));
  if (const auto* g = contract.get()) parts.push_back("(-> " + predicate(g->type) + ")");
  if (const auto* d = contract.command()) parts.push_back(sink_arrow(d->type));
  if (const auto* a = std::get_if<PublishAlways>(&contract.continuations)) {
    parts.push_back(sink_arrow(a->type));
  } else if (const auto* m = std::get_if<PublishMaybe>(&contract.continuations)) {
    parts.push_back(sink_arrow(m->type));
    parts.push_back("(-> void?)");
  }
  if (const auto* r = std::get_if<ReturnsValue>(&contract.result)) {
    parts.push_back(predicate(r->type));
  } else if (std::holds_alternative<ReturnsNothing>(contract.result)) {
    parts.push_back("void?");
  } else {
    parts.push_back("none/c");
  }

  std::string out = "(->";
  for (const auto& p : parts) out += " " + p;
  return out + ")";
}

}  // namespace scc
