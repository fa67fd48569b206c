#include "scc/value.hpp"

#include "scc/error.hpp"

namespace scc {

PictureData make_picture_data(std::int64_t width, std::int64_t height, std::int64_t seed) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::BadDimensions, "picture dimensions must be at least 1x1, got " +
                                              std::to_string(width) + "x" +
                                              std::to_string(height));
  }
  return PictureData{width, height, seed, {}};
}

PictureData overlay(const PictureData& picture, std::string text) {
  PictureData out = picture;
  out.overlays.push_back(std::move(text));
  return out;
}

Value::Value(PictureData p) : payload_(std::move(p)) {
  const auto& pic = std::get<PictureData>(payload_);
  if (pic.width < 1 || pic.height < 1) {
    throw Error(ErrorCode::BadDimensions, "picture dimensions must be at least 1x1");
  }
}

namespace {

[[noreturn]] void wrong_type(DataType want, DataType have) {
  throw Error(ErrorCode::TypeMismatch, "expected " + std::string(to_string(want)) +
                                           " value, got " + std::string(to_string(have)));
}

}  // namespace

bool Value::as_bool() const {
  if (type() != DataType::Bool) wrong_type(DataType::Bool, type());
  return std::get<bool>(payload_);
}

std::int64_t Value::as_int() const {
  if (type() != DataType::Int) wrong_type(DataType::Int, type());
  return std::get<std::int64_t>(payload_);
}

const std::string& Value::as_string() const {
  if (type() != DataType::String) wrong_type(DataType::String, type());
  return std::get<std::string>(payload_);
}

const PictureData& Value::as_picture() const {
  if (type() != DataType::Picture) wrong_type(DataType::Picture, type());
  return std::get<PictureData>(payload_);
}

Value make_picture(std::int64_t width, std::int64_t height, std::int64_t seed) {
  return Value(make_picture_data(width, height, seed));
}

std::string quote_string(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string format_value(const Value& value) {
  struct Formatter {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(const std::string& s) const { return quote_string(s); }
    std::string operator()(const PictureData& p) const {
      std::string out = "picture(" + std::to_string(p.width) + "x" + std::to_string(p.height) +
                        ",seed=" + std::to_string(p.seed);
      if (!p.overlays.empty()) {
        out += ",overlays=[";
        for (std::size_t i = 0; i < p.overlays.size(); ++i) {
          if (i > 0) out += ',';
          out += quote_string(p.overlays[i]);
        }
        out += ']';
      }
      return out + ")";
    }
  };
  return std::visit(Formatter{}, value.payload());
}

std::string format_taints(const TaintSet& taints) {
  std::string out = "{";
  bool first = true;
  for (const auto& t : taints) {
    if (!first) out += ',';
    out += t.str();
    first = false;
  }
  return out + "}";
}

}  // namespace scc
