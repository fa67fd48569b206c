#pragma once

#include <concepts>
#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "scc/types.hpp"

namespace scc {

/// Simulated bitmap. The seed stands in for pixel content.
struct PictureData {
  std::int64_t width = 1;
  std::int64_t height = 1;
  std::int64_t seed = 0;
  std::vector<std::string> overlays;

  friend bool operator==(const PictureData&, const PictureData&) = default;
};

/// Throws Error(BAD_DIMENSIONS) unless width and height are both >= 1.
PictureData make_picture_data(std::int64_t width, std::int64_t height, std::int64_t seed);

/// Copy of `picture` with `text` drawn on top; `picture` itself is untouched.
PictureData overlay(const PictureData& picture, std::string text);

/// Immutable typed value. The tag always matches the payload.
class Value {
 public:
  using Payload = std::variant<bool, std::int64_t, std::string, PictureData>;

  explicit Value(bool b) : payload_(b) {}
  template <std::integral I>
    requires(!std::same_as<I, bool>)
  explicit Value(I i) : payload_(static_cast<std::int64_t>(i)) {}
  explicit Value(std::string s) : payload_(std::move(s)) {}
  explicit Value(const char* s) : payload_(std::string(s)) {}
  explicit Value(PictureData p);

  DataType type() const noexcept { return static_cast<DataType>(payload_.index()); }

  bool as_bool() const;
  std::int64_t as_int() const;
  const std::string& as_string() const;
  const PictureData& as_picture() const;

  const Payload& payload() const noexcept { return payload_; }

  friend bool operator==(const Value&, const Value&) = default;

 private:
  Payload payload_;
};

Value make_picture(std::int64_t width, std::int64_t height, std::int64_t seed);

/// Literal form shared by logs and scenario files, e.g. `"Ads Inc"` or
/// `picture(640x480,seed=7,overlays=["Ads Inc"])`.
std::string format_value(const Value& value);
std::string quote_string(const std::string& text);

using TaintSet = std::set<ComponentName>;

/// A value together with the sources it was derived from.
struct TaintedValue {
  Value value;
  TaintSet taints;

  friend bool operator==(const TaintedValue&, const TaintedValue&) = default;
};

/// `{Camera,IP}`; names are already sorted by the set.
std::string format_taints(const TaintSet& taints);

}  // namespace scc
