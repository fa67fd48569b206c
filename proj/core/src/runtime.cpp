#include "scc/runtime.hpp"

#include <deque>
#include <utility>

#include "scc/error.hpp"
#include "scc/validate.hpp"

namespace scc {

// Unwinds a component body after a continuation took effect. Deliberately
// not derived from std::exception.
struct ContinuationSignal {
  const detail::Frame* frame;
};

struct Runtime::State {
  struct Pending {
    ComponentName component;
    TaintedValue value;
  };

  Specification spec;
  std::map<ComponentName, BoundaryContract> contracts;
  std::map<ComponentName, Implementation> registry;
  std::map<ComponentName, std::shared_ptr<SourceProvider>> sources;
  std::map<ComponentName, std::shared_ptr<ActionSink>> actions;
  std::map<ComponentName, std::vector<ComponentName>> subscribers;
  bool sealed = false;
  bool faulted = false;
  bool draining = false;
  std::deque<Pending> queue;
  std::vector<ActionRecord> log;
  RuntimeStats stats;
  TraceObserver trace;

  const Declaration& lookup(std::string_view name) const {
    const Declaration* d = spec.find(name);
    if (d == nullptr) {
      throw Error(ErrorCode::UndeclaredComponent,
                  "'" + std::string(name) + "' is not declared");
    }
    return *d;
  }

  void notify(TraceKind kind, const ComponentName& component,
              std::optional<ComponentName> peer = std::nullopt,
              std::optional<TaintedValue> value = std::nullopt) const {
    if (trace) trace(TraceEvent{kind, component, std::move(peer), std::move(value)});
  }

  void enqueue_subscribers(const ComponentName& publisher, const TaintedValue& value) {
    auto it = subscribers.find(publisher);
    if (it == subscribers.end()) return;
    for (const auto& sub : it->second) queue.push_back({sub, value});
  }

  std::optional<TaintedValue> activate(const ComponentName& name,
                                       const std::optional<TaintedValue>& arg);
  TaintedValue pull(const detail::Frame& frame, const ComponentName& target);
};

namespace detail {

struct Frame : std::enable_shared_from_this<Frame> {
  Runtime::State* state;
  ComponentName component;
  const BoundaryContract* contract;
  TaintSet taints;
  bool live = true;
  bool continued = false;
  std::optional<Error> pending;

  Frame(Runtime::State* s, ComponentName c, const BoundaryContract* k)
      : state(s), component(std::move(c)), contract(k) {}

  GetHandle get_handle() { return GetHandle(shared_from_this()); }
  DoHandle do_handle() { return DoHandle(shared_from_this()); }
  PublishHandle publish_handle() { return PublishHandle(shared_from_this()); }
  NoPublishHandle nopublish_handle() { return NoPublishHandle(shared_from_this()); }

  void ensure_live(const char* what) const {
    if (!live) {
      throw Error(ErrorCode::StaleHandle,
                  std::string(what) + " handle used after its activation ended", component.str());
    }
  }

  // Records a runtime-detected failure so that a body which swallows the
  // exception still fails.
  [[noreturn]] void raise(Error e) {
    if (!pending) pending = e;
    throw e;
  }

  void take_continuation() {
    if (continued) {
      raise(Error(ErrorCode::DoubleContinuation,
                  "a continuation was already invoked in this activation", component.str()));
    }
    continued = true;
    ++state->stats.continuations;
  }
};

}  // namespace detail

namespace {

Error contract_violation(const ComponentName& component, const std::string& what,
                         DataType want, DataType have) {
  return Error(ErrorCode::ContractViolation,
               what + ": expected " + std::string(to_string(want)) + ", got " +
                   std::string(to_string(have)),
               component.str());
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

// ---------------------------------------------------------------------------
// Handles

Value GetHandle::operator()() const {
  detail::Frame& f = *frame_;
  f.ensure_live("get");
  const GetCapability* cap = f.contract->get();
  try {
    TaintedValue tv = f.state->pull(f, cap->target);
    f.taints.insert(tv.taints.begin(), tv.taints.end());
    ++f.state->stats.pulls;
    f.state->notify(TraceKind::Pull, f.component, cap->target, tv);
    return std::move(tv.value);
  } catch (const Error& e) {
    f.raise(e);
  }
}

void DoHandle::operator()(const Value& value) const {
  detail::Frame& f = *frame_;
  f.ensure_live("do");
  const DoCapability* cap = f.contract->command();
  if (value.type() != cap->type) {
    f.raise(contract_violation(f.component, "value sent to " + cap->target.str(), cap->type,
                               value.type()));
  }
  TaintedValue tv{value, f.taints};
  f.state->log.push_back({cap->target, tv});
  ++f.state->stats.commands;
  f.state->notify(TraceKind::Command, f.component, cap->target, tv);
  try {
    f.state->actions.at(cap->target)->deliver(value);
  } catch (const Error& e) {
    f.raise(e);
  } catch (const std::exception& e) {
    f.raise(Error(ErrorCode::ImplementationPanic, e.what(), cap->target.str()));
  }
}

void PublishHandle::operator()(const Value& value) const {
  detail::Frame& f = *frame_;
  f.ensure_live("publish");
  const auto& k = f.contract->continuations;
  const DataType want = std::holds_alternative<PublishAlways>(k)
                            ? std::get<PublishAlways>(k).type
                            : std::get<PublishMaybe>(k).type;
  if (f.continued) {
    f.take_continuation();  // raises DOUBLE_CONTINUATION
  }
  if (value.type() != want) {
    f.raise(contract_violation(f.component, "published value", want, value.type()));
  }
  f.take_continuation();
  TaintedValue tv{value, f.taints};
  f.state->notify(TraceKind::Publish, f.component, std::nullopt, tv);
  f.state->enqueue_subscribers(f.component, tv);
  throw ContinuationSignal{&f};
}

void NoPublishHandle::operator()() const {
  detail::Frame& f = *frame_;
  f.ensure_live("nopublish");
  f.take_continuation();
  f.state->notify(TraceKind::NoPublish, f.component);
  throw ContinuationSignal{&f};
}

// ---------------------------------------------------------------------------
// Implementation

Implementation::Implementation(Body body) : body_(std::move(body)) {}

std::size_t Implementation::shape_for(const BoundaryContract& c) {
  const bool get = c.get() != nullptr;
  if (c.command() != nullptr) return 6;
  if (std::holds_alternative<PublishMaybe>(c.continuations)) return get ? 5 : 4;
  if (std::holds_alternative<PublishAlways>(c.continuations)) return get ? 3 : 2;
  return get ? 1 : 0;
}

std::string_view Implementation::shape_name(std::size_t shape) {
  static constexpr std::string_view names[] = {
      "Value()",
      "Value(GetHandle)",
      "void(const Value&, PublishHandle)",
      "void(const Value&, GetHandle, PublishHandle)",
      "void(const Value&, PublishHandle, NoPublishHandle)",
      "void(const Value&, GetHandle, PublishHandle, NoPublishHandle)",
      "void(const Value&, DoHandle)",
  };
  return shape < std::size(names) ? names[shape] : "?";
}

// ---------------------------------------------------------------------------
// Dispatch

TaintedValue Runtime::State::pull(const detail::Frame& frame, const ComponentName& target) {
  const Declaration& decl = lookup(target.str());
  if (const auto* src = decl.as<SourceDecl>()) {
    std::optional<Value> v = sources.at(target)->current();
    if (!v) {
      throw Error(ErrorCode::PullBeforeValue,
                  "source '" + target.str() + "' has no value yet", frame.component.str());
    }
    if (v->type() != src->out_type) {
      throw contract_violation(target, "source value", src->out_type, v->type());
    }
    return TaintedValue{std::move(*v), {target}};
  }
  std::optional<TaintedValue> out = activate(target, std::nullopt);
  return std::move(*out);
}

std::optional<TaintedValue> Runtime::State::activate(const ComponentName& name,
                                                     const std::optional<TaintedValue>& arg) {
  const BoundaryContract& contract = contracts.at(name);
  const Implementation& impl = registry.at(name);
  auto frame = std::make_shared<detail::Frame>(this, name, &contract);

  if (arg) {
    if (!contract.activation || arg->value.type() != *contract.activation) {
      throw contract_violation(name, "activation value", contract.activation.value_or(DataType::Bool),
                               arg->value.type());
    }
    frame->taints = arg->taints;
  }
  ++stats.activations;
  notify(TraceKind::Activate, name, std::nullopt, arg);

  struct Expire {
    detail::Frame& f;
    ~Expire() { f.live = false; }
  } expire{*frame};

  std::optional<Value> returned;
  try {
    std::visit(
        Overloaded{
            [&](const Implementation::Pulled& fn) { returned = fn(); },
            [&](const Implementation::PulledWithGet& fn) { returned = fn(frame->get_handle()); },
            [&](const Implementation::Publishing& fn) {
              fn(arg->value, frame->publish_handle());
            },
            [&](const Implementation::PublishingWithGet& fn) {
              fn(arg->value, frame->get_handle(), frame->publish_handle());
            },
            [&](const Implementation::MaybePublishing& fn) {
              fn(arg->value, frame->publish_handle(), frame->nopublish_handle());
            },
            [&](const Implementation::MaybePublishingWithGet& fn) {
              fn(arg->value, frame->get_handle(), frame->publish_handle(),
                 frame->nopublish_handle());
            },
            [&](const Implementation::Commanding& fn) { fn(arg->value, frame->do_handle()); },
        },
        impl.body());
  } catch (const ContinuationSignal&) {
    // Normal exit through publish or nopublish.
  } catch (const Error& e) {
    if (frame->pending) throw *frame->pending;
    if (!e.component().empty()) throw;
    throw Error(e.code(), e.detail(), name.str(), e.names());
  } catch (const std::exception& e) {
    if (frame->pending) throw *frame->pending;
    throw Error(ErrorCode::ImplementationPanic, e.what(), name.str());
  } catch (...) {
    if (frame->pending) throw *frame->pending;
    throw Error(ErrorCode::ImplementationPanic, "non-standard exception", name.str());
  }

  if (frame->pending) throw *frame->pending;

  if (std::holds_alternative<NoReturn>(contract.result)) {
    if (!frame->continued) {
      throw Error(ErrorCode::NoContinuationCalled,
                  "body returned without invoking a continuation", name.str());
    }
    ++stats.completed_no_return;
    return std::nullopt;
  }
  if (const auto* rv = std::get_if<ReturnsValue>(&contract.result)) {
    if (returned->type() != rv->type) {
      throw contract_violation(name, "returned value", rv->type, returned->type());
    }
    return TaintedValue{std::move(*returned), frame->taints};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Runtime

namespace {

// Names of the contexts on some cycle of the when-provided trigger relation,
// in declaration order.
std::vector<std::string> publish_cycle_members(const Specification& spec) {
  std::map<std::string, std::string> trigger_of;
  for (const auto& d : spec.declarations) {
    if (const auto* ctx = d.as<ContextDecl>()) {
      if (const ComponentName* t = ctx->contract.trigger()) trigger_of[ctx->name.str()] = t->str();
    }
  }
  std::vector<std::string> out;
  for (const auto& d : spec.declarations) {
    const std::string& start = d.name().str();
    auto it = trigger_of.find(start);
    for (std::size_t step = 0; it != trigger_of.end() && step <= trigger_of.size(); ++step) {
      if (it->second == start) {
        out.push_back(start);
        break;
      }
      it = trigger_of.find(it->second);
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

Runtime::Runtime(Specification spec) : state_(std::make_unique<State>()) {
  ValidationReport report = validate(spec);
  if (!report.empty()) {
    std::vector<std::string> codes;
    for (const auto& d : report) codes.emplace_back(to_string(d.code));
    throw Error(ErrorCode::InvalidSpec, "specification has " + std::to_string(report.size()) +
                                            " diagnostic(s): " + join(codes));
  }
  state_->spec = std::move(spec);
  for (const auto& d : state_->spec.declarations) {
    if (d.kind() == ComponentKind::Context || d.kind() == ComponentKind::Controller) {
      state_->contracts.emplace(d.name(), derive_contract(state_->spec, d.name()));
    }
    if (const auto* ctx = d.as<ContextDecl>()) {
      if (const ComponentName* t = ctx->contract.trigger()) {
        state_->subscribers[*t].push_back(ctx->name);
      }
    } else if (const auto* ctr = d.as<ControllerDecl>()) {
      state_->subscribers[ctr->trigger].push_back(ctr->name);
    }
  }
}

Runtime::~Runtime() = default;
Runtime::Runtime(Runtime&&) noexcept = default;
Runtime& Runtime::operator=(Runtime&&) noexcept = default;

const Specification& Runtime::spec() const noexcept { return state_->spec; }

const std::map<ComponentName, BoundaryContract>& Runtime::contracts() const noexcept {
  return state_->contracts;
}

void Runtime::implement(std::string_view name, Implementation impl) {
  if (state_->sealed) throw Error(ErrorCode::Sealed, "runtime is sealed", std::string(name));
  const Declaration* d = state_->spec.find(name);
  if (d == nullptr ||
      (d->kind() != ComponentKind::Context && d->kind() != ComponentKind::Controller)) {
    throw Error(ErrorCode::UndeclaredComponent,
                "'" + std::string(name) + "' is not a declared context or controller");
  }
  const BoundaryContract& contract = state_->contracts.at(d->name());
  const std::size_t want = Implementation::shape_for(contract);
  if (impl.body().index() != want) {
    throw Error(ErrorCode::ContractViolation,
                "implementation has shape " +
                    std::string(Implementation::shape_name(impl.body().index())) +
                    " but the contract " + render_contract(contract) + " requires " +
                    std::string(Implementation::shape_name(want)),
                std::string(name));
  }
  if (!state_->registry.emplace(d->name(), std::move(impl)).second) {
    throw Error(ErrorCode::DuplicateImplementation, "already implemented", std::string(name));
  }
}

namespace {

template <class Map, class Binding>
void bind(Runtime::State& state, Map& map, std::string_view name, Binding binding,
          ComponentKind kind) {
  if (state.sealed) throw Error(ErrorCode::Sealed, "runtime is sealed", std::string(name));
  const Declaration& d = state.lookup(name);
  if (d.kind() != kind) {
    throw Error(ErrorCode::WrongKind,
                "'" + std::string(name) + "' is a " + std::string(to_string(d.kind())) +
                    ", not a " + std::string(to_string(kind)));
  }
  if (!binding) throw Error(ErrorCode::ContractViolation, "null binding", std::string(name));
  if (!map.emplace(d.name(), std::move(binding)).second) {
    throw Error(ErrorCode::DuplicateBinding, "already bound", std::string(name));
  }
}

}  // namespace

void Runtime::bind_source(std::string_view name, std::shared_ptr<SourceProvider> provider) {
  bind(*state_, state_->sources, name, std::move(provider), ComponentKind::Source);
}

void Runtime::bind_action(std::string_view name, std::shared_ptr<ActionSink> sink) {
  bind(*state_, state_->actions, name, std::move(sink), ComponentKind::Action);
}

void Runtime::seal() {
  State& s = *state_;
  if (s.sealed) throw Error(ErrorCode::Sealed, "runtime is already sealed");

  std::vector<std::string> cycle = publish_cycle_members(s.spec);
  if (!cycle.empty()) {
    throw Error(ErrorCode::SealCycle, "publish cycle through " + join(cycle), {}, cycle);
  }

  std::vector<std::string> missing_impl;
  std::vector<std::string> missing_binding;
  for (const auto& d : s.spec.declarations) {
    switch (d.kind()) {
      case ComponentKind::Context:
      case ComponentKind::Controller:
        if (!s.registry.contains(d.name())) missing_impl.push_back(d.name().str());
        break;
      case ComponentKind::Source:
        if (!s.sources.contains(d.name())) missing_binding.push_back(d.name().str());
        break;
      case ComponentKind::Action:
        if (!s.actions.contains(d.name())) missing_binding.push_back(d.name().str());
        break;
    }
  }
  if (!missing_impl.empty()) {
    throw Error(ErrorCode::MissingImplementation, "not implemented: " + join(missing_impl), {},
                missing_impl);
  }
  if (!missing_binding.empty()) {
    throw Error(ErrorCode::MissingBinding, "not bound: " + join(missing_binding), {},
                missing_binding);
  }
  s.sealed = true;
}

bool Runtime::sealed() const noexcept { return state_->sealed; }
bool Runtime::faulted() const noexcept { return state_->faulted; }

void Runtime::set_source(std::string_view name, const Value& value) {
  State& s = *state_;
  const Declaration& d = s.lookup(name);
  const auto* src = d.as<SourceDecl>();
  if (src == nullptr) {
    throw Error(ErrorCode::WrongKind, "'" + std::string(name) + "' is a " +
                                          std::string(to_string(d.kind())) + ", not a source");
  }
  if (value.type() != src->out_type) {
    throw Error(ErrorCode::TypeMismatch,
                "source '" + std::string(name) + "' has type " +
                    std::string(to_string(src->out_type)) + ", got " +
                    std::string(to_string(value.type())));
  }
  auto it = s.sources.find(src->name);
  if (it == s.sources.end()) {
    throw Error(ErrorCode::MissingBinding, "source is not bound", std::string(name));
  }
  it->second->store(value);
}

void Runtime::emit(std::string_view name, const Value& value) {
  State& s = *state_;
  if (s.faulted) {
    throw Error(ErrorCode::RuntimeFaulted, "an earlier dispatch failed; runtime no longer emits");
  }
  if (!s.sealed) throw Error(ErrorCode::Unsealed, "runtime must be sealed before emitting");
  if (s.draining) throw Error(ErrorCode::ContractViolation, "emit called during dispatch");
  const Declaration& d = s.lookup(name);
  set_source(name, value);

  TaintedValue tv{value, {d.name()}};
  s.notify(TraceKind::Emit, d.name(), std::nullopt, tv);
  s.enqueue_subscribers(d.name(), tv);

  s.draining = true;
  try {
    while (!s.queue.empty()) {
      State::Pending next = std::move(s.queue.front());
      s.queue.pop_front();
      s.activate(next.component, next.value);
    }
  } catch (...) {
    s.draining = false;
    s.faulted = true;
    s.queue.clear();
    throw;
  }
  s.draining = false;
}

const std::vector<ActionRecord>& Runtime::action_log() const noexcept { return state_->log; }

const RuntimeStats& Runtime::stats() const noexcept { return state_->stats; }

void Runtime::set_trace(TraceObserver observer) { state_->trace = std::move(observer); }

// ---------------------------------------------------------------------------

std::string format_trace(const TraceEvent& e) {
  auto tainted = [](const TaintedValue& tv) {
    return format_value(tv.value) + " taints=" + format_taints(tv.taints);
  };
  switch (e.kind) {
    case TraceKind::Emit:
      return "emit " + e.component.str() + " " + tainted(*e.value);
    case TraceKind::Activate:
      return "activate " + e.component.str() + (e.value ? " " + tainted(*e.value) : "");
    case TraceKind::Pull:
      return "pull " + e.component.str() + " <- " + e.peer->str() + " " + tainted(*e.value);
    case TraceKind::Publish:
      return "publish " + e.component.str() + " " + tainted(*e.value);
    case TraceKind::NoPublish:
      return "nopublish " + e.component.str();
    case TraceKind::Command:
      return "do " + e.component.str() + " -> " + e.peer->str() + " " + tainted(*e.value);
  }
  return {};
}

}  // namespace scc
