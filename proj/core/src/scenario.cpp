#include "scc/scenario.hpp"

#include <cctype>
#include <charconv>
#include <string_view>

namespace scc {
namespace {

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no, const std::string& origin)
      : line_(line), line_no_(line_no), origin_(origin) {}

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(ErrorCode::ScenarioParseError, message, origin_, line_no_, pos + 1);
  }

  std::size_t pos() const noexcept { return pos_; }

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool at_end_or_comment() {
    skip_space();
    return pos_ >= line_.size() || line_[pos_] == '#';
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                                   line_[pos_] == '_' || line_[pos_] == '-')) {
      ++pos_;
    }
    return line_.substr(start, pos_ - start);
  }

  bool consume(char c) {
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  void expect(std::string_view text) {
    if (line_.substr(pos_, text.size()) != text) fail("expected '" + std::string(text) + "'");
    pos_ += text.size();
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    if (pos_ < line_.size() && line_[pos_] == '-') ++pos_;
    while (pos_ < line_.size() && line_[pos_] >= '0' && line_[pos_] <= '9') ++pos_;
    std::int64_t out = 0;
    const char* first = line_.data() + start;
    const char* last = line_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last || first == last) {
      pos_ = start;
      fail("expected integer");
    }
    return out;
  }

  std::string quoted() {
    expect('"');
    std::string out;
    while (true) {
      if (pos_ >= line_.size()) fail("unterminated string");
      char c = line_[pos_++];
      if (c == '"') return out;
      if (c == '\\') {
        if (pos_ >= line_.size() || (line_[pos_] != '"' && line_[pos_] != '\\')) {
          fail("unsupported escape; only \\\" and \\\\ are allowed");
        }
        c = line_[pos_++];
      }
      out += c;
    }
  }

  Value literal() {
    skip_space();
    if (pos_ >= line_.size()) fail("expected literal");
    const char c = line_[pos_];
    if (c == '"') return Value(quoted());
    if (c == '-' || (c >= '0' && c <= '9')) return Value(integer());
    const std::size_t start = pos_;
    std::string_view w = word();
    if (w == "true") return Value(true);
    if (w == "false") return Value(false);
    if (w == "picture") return picture(start);
    pos_ = start;
    fail("expected literal (true, false, integer, string or picture(...))");
  }

  Value picture(std::size_t start) {
    expect('(');
    const std::int64_t width = integer();
    expect('x');
    const std::int64_t height = integer();
    expect(",seed=");
    const std::int64_t seed = integer();
    if (width < 1 || height < 1) {
      pos_ = start;
      fail("picture dimensions must be at least 1x1");
    }
    PictureData p{width, height, seed, {}};
    if (consume(',')) {
      expect("overlays=[");
      if (!consume(']')) {
        do {
          p.overlays.push_back(quoted());
        } while (consume(','));
        expect(']');
      }
    }
    expect(')');
    return Value(std::move(p));
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  const std::string& origin_;
  std::size_t pos_ = 0;
};

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
  Scenario out;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string::npos) end = text.size();
    ++line_no;
    LineReader r(std::string_view(text).substr(begin, end - begin), line_no, origin);
    begin = end + 1;

    if (r.at_end_or_comment()) continue;
    const std::size_t verb_pos = r.pos();
    std::string_view verb = r.word();
    ScenarioStep::Kind kind;
    if (verb == "set") {
      kind = ScenarioStep::Kind::Set;
    } else if (verb == "emit") {
      kind = ScenarioStep::Kind::Emit;
    } else {
      r.fail_at(verb_pos, "expected 'set' or 'emit'");
    }
    r.skip_space();
    const std::size_t name_pos = r.pos();
    std::string_view name = r.word();
    if (!ComponentName::is_valid(name)) r.fail_at(name_pos, "expected source name");
    Value value = r.literal();
    if (!r.at_end_or_comment()) r.fail("unexpected text after literal");
    out.steps.push_back({kind, ComponentName(std::string(name)), std::move(value), line_no});
  }
  return out;
}

std::string format_scenario(const Scenario& scenario) {
  std::string out;
  for (const auto& step : scenario.steps) {
    out += step.kind == ScenarioStep::Kind::Set ? "set " : "emit ";
    out += step.source.str() + " " + format_value(step.value) + "\n";
  }
  return out;
}

Value parse_literal(const std::string& text) {
  static const std::string origin = "<literal>";
  LineReader r(text, 1, origin);
  Value v = r.literal();
  if (!r.at_end_or_comment()) r.fail("unexpected text after literal");
  return v;
}

StepError::StepError(std::size_t step, std::size_t line, const Error& cause)
    : Error(cause.code(),
            "step " + std::to_string(step) + (line ? " (line " + std::to_string(line) + ")" : "") +
                ": " + cause.detail(),
            cause.component(), cause.names()),
      step_(step),
      line_(line) {}

void run_scenario(Runtime& runtime, const Scenario& scenario) {
  for (std::size_t i = 0; i < scenario.steps.size(); ++i) {
    const ScenarioStep& step = scenario.steps[i];
    try {
      if (step.kind == ScenarioStep::Kind::Set) {
        runtime.set_source(step.source.str(), step.value);
      } else {
        runtime.emit(step.source.str(), step.value);
      }
    } catch (const Error& e) {
      throw StepError(i, step.line, e);
    }
  }
}

}  // namespace scc
