#pragma once

// Simulated platform resources and the `.scn` scenario driver.
//
// Scenario files hold one step per line:
//
//   # comment
//   set IP "Ads Inc"
//   emit Camera picture(640x480,seed=7)
//
// `set` replaces a source's pull value; `emit` also publishes it.
// Literals: true, false, decimal integers, double-quoted strings with \" and
// \\ escapes, and picture(WxH,seed=N) optionally followed by
// ,overlays=["text",...] before the closing parenthesis.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scc/error.hpp"
#include "scc/runtime.hpp"
#include "scc/value.hpp"

namespace scc {

/// Source whose value is set by the test or scenario driving it.
class ScriptedSource : public SourceProvider {
 public:
  ScriptedSource() = default;
  explicit ScriptedSource(Value initial) : value_(std::move(initial)) {}

  std::optional<Value> current() const override { return value_; }
  void store(const Value& value) override { value_ = value; }

 private:
  std::optional<Value> value_;
};

/// Action sink that keeps every delivered value in order.
class RecordingSink : public ActionSink {
 public:
  void deliver(const Value& value) override { deliveries_.push_back(value); }
  const std::vector<Value>& deliveries() const noexcept { return deliveries_; }

 private:
  std::vector<Value> deliveries_;
};

struct ScenarioStep {
  enum class Kind { Set, Emit };

  Kind kind;
  ComponentName source;
  Value value;
  std::size_t line = 0;  // 1-based source line; 0 when built in code

  friend bool operator==(const ScenarioStep& a, const ScenarioStep& b) {
    return a.kind == b.kind && a.source == b.source && a.value == b.value;
  }
};

struct Scenario {
  std::vector<ScenarioStep> steps;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ParseError(SCENARIO_PARSE_ERROR).
Scenario parse_scenario(const std::string& text, const std::string& origin = "<memory>");

std::string format_scenario(const Scenario& scenario);

/// Parses one literal, e.g. for command-line use.
Value parse_literal(const std::string& text);

/// Runtime error raised while applying a scenario step.
class StepError : public Error {
 public:
  StepError(std::size_t step, std::size_t line, const Error& cause);

  std::size_t step() const noexcept { return step_; }  // 0-based
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t step_;
  std::size_t line_;
};

/// Applies each step to a sealed runtime; failures become StepError.
void run_scenario(Runtime& runtime, const Scenario& scenario);

}  // namespace scc
