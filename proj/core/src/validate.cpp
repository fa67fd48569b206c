#include "scc/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace scc {

std::string_view to_string(DiagCode code) {
  switch (code) {
    case DiagCode::DupName: return "DUP_NAME";
    case DiagCode::UnresolvedRef: return "UNRESOLVED_REF";
    case DiagCode::PullNotRequired: return "PULL_NOT_REQUIRED";
    case DiagCode::BadPublishSpec: return "BAD_PUBLISH_SPEC";
    case DiagCode::GetCycle: return "GET_CYCLE";
    case DiagCode::BadTriggerKind: return "BAD_TRIGGER_KIND";
  }
  return "?";
}

namespace {

class Validator {
 public:
  explicit Validator(const Specification& spec) : spec_(spec) {
    for (std::size_t i = 0; i < spec.declarations.size(); ++i) {
      first_.emplace(spec.declarations[i].name().str(), i);
    }
  }

  ValidationReport run() {
    for (std::size_t i = 0; i < spec_.declarations.size(); ++i) {
      check_declaration(i);
    }
    check_get_cycles();
    std::stable_sort(report_.begin(), report_.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                       if (a.index != b.index) return a.index < b.index;
                       return a.code < b.code;
                     });
    return std::move(report_);
  }

 private:
  const Declaration* resolve(const ComponentName& name) const {
    auto it = first_.find(name.str());
    return it == first_.end() ? nullptr : &spec_.declarations[it->second];
  }

  void add(std::size_t index, DiagCode code, std::string message) {
    report_.push_back({index, code, std::move(message)});
  }

  void check_declaration(std::size_t i) {
    const Declaration& decl = spec_.declarations[i];
    const std::string& name = decl.name().str();
    if (first_.at(name) != i) {
      add(i, DiagCode::DupName, "'" + name + "' is already declared");
    }
    if (const auto* ctx = decl.as<ContextDecl>()) {
      check_context(i, *ctx);
    } else if (const auto* ctr = decl.as<ControllerDecl>()) {
      check_controller(i, *ctr);
    }
  }

  void check_context(std::size_t i, const ContextDecl& ctx) {
    const InteractionContract& c = ctx.contract;
    const std::string& name = ctx.name.str();

    if (c.when_required() && c.publish != PublishSpec::NoPublish) {
      add(i, DiagCode::BadPublishSpec,
          "when-required context '" + name + "' cannot have a publish specification");
    } else if (!c.when_required() && c.publish == PublishSpec::NoPublish) {
      add(i, DiagCode::BadPublishSpec,
          "when-provided context '" + name + "' needs always_publish or maybe_publish");
    }

    if (const ComponentName* trigger = c.trigger()) {
      const Declaration* t = resolve(*trigger);
      if (t == nullptr) {
        add(i, DiagCode::UnresolvedRef, "trigger '" + trigger->str() + "' is not declared");
      } else if (t->kind() != ComponentKind::Source &&
                 t->kind() != ComponentKind::Context) {
        add(i, DiagCode::BadTriggerKind,
            "trigger '" + trigger->str() + "' is " + std::string(to_string(t->kind())) +
                "; expected a source or context");
      }
    }

    if (c.get_target) {
      const std::string& target = c.get_target->str();
      const Declaration* g = resolve(*c.get_target);
      if (g == nullptr) {
        add(i, DiagCode::UnresolvedRef, "get target '" + target + "' is not declared");
      } else if (const auto* gctx = g->as<ContextDecl>()) {
        if (!gctx->contract.when_required()) {
          add(i, DiagCode::PullNotRequired,
              "'" + target + "' is pulled from but is not when-required");
        }
      } else if (g->kind() != ComponentKind::Source) {
        add(i, DiagCode::BadTriggerKind,
            "get target '" + target + "' is " + std::string(to_string(g->kind())) +
                "; expected a source or when-required context");
      }
    }
  }

  void check_controller(std::size_t i, const ControllerDecl& ctr) {
    const Declaration* t = resolve(ctr.trigger);
    if (t == nullptr) {
      add(i, DiagCode::UnresolvedRef, "trigger '" + ctr.trigger.str() + "' is not declared");
    } else if (t->kind() != ComponentKind::Context) {
      add(i, DiagCode::BadTriggerKind,
          "controller trigger '" + ctr.trigger.str() + "' is " +
              std::string(to_string(t->kind())) + "; expected a context");
    }
    const Declaration* a = resolve(ctr.action);
    if (a == nullptr) {
      add(i, DiagCode::UnresolvedRef, "action '" + ctr.action.str() + "' is not declared");
    } else if (a->kind() != ComponentKind::Action) {
      add(i, DiagCode::BadTriggerKind,
          "'" + ctr.action.str() + "' is " + std::string(to_string(a->kind())) +
              "; expected an action");
    }
  }

  // Cycles of the get relation restricted to when-required contexts.
  void check_get_cycles() {
    const auto n = spec_.declarations.size();
    std::vector<std::optional<std::size_t>> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (first_.at(spec_.declarations[i].name().str()) != i) continue;
      const auto* ctx = spec_.declarations[i].as<ContextDecl>();
      if (ctx == nullptr || !ctx->contract.when_required() || !ctx->contract.get_target) {
        continue;
      }
      auto it = first_.find(ctx->contract.get_target->str());
      if (it == first_.end()) continue;
      const auto* target = spec_.declarations[it->second].as<ContextDecl>();
      if (target != nullptr && target->contract.when_required()) next[i] = it->second;
    }
    // Out-degree is at most one, so a node is on a cycle iff following the
    // chain from it returns to it within n steps.
    for (std::size_t i = 0; i < n; ++i) {
      std::optional<std::size_t> cur = next[i];
      for (std::size_t step = 0; cur && step < n; ++step) {
        if (*cur == i) {
          add(i, DiagCode::GetCycle,
              "'" + spec_.declarations[i].name().str() + "' is on a get cycle");
          break;
        }
        cur = next[*cur];
      }
    }
  }

  const Specification& spec_;
  std::map<std::string, std::size_t> first_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate(const Specification& spec) {
  return Validator(spec).run();
}

}  // namespace scc
