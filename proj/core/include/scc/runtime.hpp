#pragma once

// Reactive execution engine.
//
// A Runtime is created from a validated Specification, receives exactly one
// Implementation per context and controller plus a binding for every source
// and action, and is then sealed. After sealing, sources emit values; each
// emission is dispatched breadth-first through the publish topology until
// the activation queue is empty.
//
// Implementations see only the handles their boundary contract grants:
//
//   when-required, no get           Value()
//   when-required, get              Value(GetHandle)
//   when-provided, always_publish   void(const Value&, [GetHandle,] PublishHandle)
//   when-provided, maybe_publish    void(const Value&, [GetHandle,] PublishHandle, NoPublishHandle)
//   controller                      void(const Value&, DoHandle)
//
// Publish and no-publish never return: they unwind the body back into the
// runtime. Bodies must not swallow that unwinding (`catch (...)` without
// rethrow). Handles become stale once their activation ends.
//
// Every value carries the set of sources it was derived from. The taint of
// anything a component publishes, returns or sends is the union of the
// taints of its activation value and of every value it pulled so far.
//
// A Runtime is single-threaded. Distinct instances are independent.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "scc/contract.hpp"
#include "scc/types.hpp"
#include "scc/value.hpp"

namespace scc {

namespace detail {
struct Frame;
}

/// Zero-argument pull of the granted get target.
class GetHandle {
 public:
  Value operator()() const;

 private:
  friend struct detail::Frame;
  explicit GetHandle(std::shared_ptr<detail::Frame> frame) : frame_(std::move(frame)) {}
  std::shared_ptr<detail::Frame> frame_;
};

/// Sends one value to the granted action.
class DoHandle {
 public:
  void operator()(const Value& value) const;

 private:
  friend struct detail::Frame;
  explicit DoHandle(std::shared_ptr<detail::Frame> frame) : frame_(std::move(frame)) {}
  std::shared_ptr<detail::Frame> frame_;
};

class PublishHandle {
 public:
  [[noreturn]] void operator()(const Value& value) const;

 private:
  friend struct detail::Frame;
  explicit PublishHandle(std::shared_ptr<detail::Frame> frame) : frame_(std::move(frame)) {}
  std::shared_ptr<detail::Frame> frame_;
};

class NoPublishHandle {
 public:
  [[noreturn]] void operator()() const;

 private:
  friend struct detail::Frame;
  explicit NoPublishHandle(std::shared_ptr<detail::Frame> frame) : frame_(std::move(frame)) {}
  std::shared_ptr<detail::Frame> frame_;
};

/// A component body in one of the shapes listed at the top of this file.
class Implementation {
 public:
  using Pulled = std::function<Value()>;
  using PulledWithGet = std::function<Value(GetHandle)>;
  using Publishing = std::function<void(const Value&, PublishHandle)>;
  using PublishingWithGet = std::function<void(const Value&, GetHandle, PublishHandle)>;
  using MaybePublishing = std::function<void(const Value&, PublishHandle, NoPublishHandle)>;
  using MaybePublishingWithGet =
      std::function<void(const Value&, GetHandle, PublishHandle, NoPublishHandle)>;
  using Commanding = std::function<void(const Value&, DoHandle)>;

  using Body = std::variant<Pulled, PulledWithGet, Publishing, PublishingWithGet,
                            MaybePublishing, MaybePublishingWithGet, Commanding>;

  explicit Implementation(Body body);

  /// Picks the shape from the callable's parameter list.
  template <class F>
    requires(!std::is_same_v<std::remove_cvref_t<F>, Implementation> &&
             !std::is_same_v<std::remove_cvref_t<F>, Body>)
  Implementation(F f) : body_(deduce(std::move(f))) {}

  const Body& body() const noexcept { return body_; }

  /// Index into Body required by `contract`.
  static std::size_t shape_for(const BoundaryContract& contract);
  static std::string_view shape_name(std::size_t shape);

 private:
  template <class F>
  static Body deduce(F f) {
    if constexpr (std::is_invocable_v<F, const Value&, GetHandle, PublishHandle,
                                      NoPublishHandle>) {
      return MaybePublishingWithGet(std::move(f));
    } else if constexpr (std::is_invocable_v<F, const Value&, PublishHandle, NoPublishHandle>) {
      return MaybePublishing(std::move(f));
    } else if constexpr (std::is_invocable_v<F, const Value&, GetHandle, PublishHandle>) {
      return PublishingWithGet(std::move(f));
    } else if constexpr (std::is_invocable_v<F, const Value&, PublishHandle>) {
      return Publishing(std::move(f));
    } else if constexpr (std::is_invocable_v<F, const Value&, DoHandle>) {
      return Commanding(std::move(f));
    } else if constexpr (std::is_invocable_r_v<Value, F, GetHandle>) {
      return PulledWithGet(std::move(f));
    } else if constexpr (std::is_invocable_r_v<Value, F>) {
      return Pulled(std::move(f));
    } else {
      static_assert(sizeof(F) == 0, "callable does not match any component shape");
    }
  }

  Body body_;
};

/// Platform-side provider behind a source. Trusted.
class SourceProvider {
 public:
  virtual ~SourceProvider() = default;
  /// Current pull value, or nullopt if none has been set yet.
  virtual std::optional<Value> current() const = 0;
  virtual void store(const Value& value) = 0;
};

/// Platform-side consumer behind an action. Trusted.
class ActionSink {
 public:
  virtual ~ActionSink() = default;
  virtual void deliver(const Value& value) = 0;
};

struct ActionRecord {
  ComponentName action;
  TaintedValue value;

  friend bool operator==(const ActionRecord&, const ActionRecord&) = default;
};

enum class TraceKind { Emit, Activate, Pull, Publish, NoPublish, Command };

struct TraceEvent {
  TraceKind kind;
  ComponentName component;            // emitting source or active component
  std::optional<ComponentName> peer;  // pull target or commanded action
  std::optional<TaintedValue> value;  // absent for pulled activations and nopublish
};

/// One line, e.g. `pull ComposeDisplay <- MakeAd "Ads Inc" taints={IP}`.
std::string format_trace(const TraceEvent& event);

using TraceObserver = std::function<void(const TraceEvent&)>;

struct RuntimeStats {
  std::size_t activations = 0;
  std::size_t pulls = 0;
  std::size_t commands = 0;
  /// Continuation invocations that took effect.
  std::size_t continuations = 0;
  /// Activations with a NoReturn contract that completed without error.
  std::size_t completed_no_return = 0;
};

class Runtime {
 public:
  /// Throws Error(INVALID_SPEC) if validate(spec) is not empty.
  explicit Runtime(Specification spec);
  ~Runtime();
  Runtime(Runtime&&) noexcept;
  Runtime& operator=(Runtime&&) noexcept;

  const Specification& spec() const noexcept;
  const std::map<ComponentName, BoundaryContract>& contracts() const noexcept;

  /// Binds the implementation of a context or controller. Errors:
  /// UNDECLARED_COMPONENT, DUPLICATE_IMPLEMENTATION, SEALED, and
  /// CONTRACT_VIOLATION when the body's shape does not fit the contract.
  void implement(std::string_view name, Implementation impl);

  void bind_source(std::string_view name, std::shared_ptr<SourceProvider> provider);
  void bind_action(std::string_view name, std::shared_ptr<ActionSink> sink);

  /// Completeness checks. Errors: SEAL_CYCLE, MISSING_IMPLEMENTATION,
  /// MISSING_BINDING (offending names in declaration order), SEALED.
  void seal();
  bool sealed() const noexcept;
  /// True after a dispatch error; the runtime then rejects further emits.
  bool faulted() const noexcept;

  /// Replaces a source's pull value without publishing it.
  void set_source(std::string_view name, const Value& value);

  /// Publishes `value` from source `name` and runs to quiescence.
  void emit(std::string_view name, const Value& value);

  const std::vector<ActionRecord>& action_log() const noexcept;
  const RuntimeStats& stats() const noexcept;

  void set_trace(TraceObserver observer);

  struct State;

 private:
  std::unique_ptr<State> state_;
};

}  // namespace scc
