#include "scc/parser.hpp"

#include <string_view>

#include "scc/error.hpp"

namespace scc {
namespace {

enum class TokenKind { LParen, RParen, LBracket, RBracket, Symbol, End };

struct Token {
  TokenKind kind;
  std::string_view text;
  SourceLocation loc;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Symbol: return "'" + std::string(t.text) + "'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    SourceLocation loc{line_, column_};
    if (pos_ >= text_.size()) return {TokenKind::End, {}, loc};
    const char c = text_[pos_];
    TokenKind kind = TokenKind::Symbol;
    switch (c) {
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      default: break;
    }
    if (kind != TokenKind::Symbol) {
      advance();
      return {kind, text_.substr(pos_ - 1, 1), loc};
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) advance();
    return {TokenKind::Symbol, text_.substr(start, pos_ - start), loc};
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  }
  static bool is_delimiter(char c) {
    return is_space(c) || c == '(' || c == ')' || c == '[' || c == ']' || c == ';';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      if (is_space(text_[pos_])) {
        advance();
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(const SourceText& src) : src_(src), lexer_(src.content) {
    look_ = lexer_.next();
  }

  LocatedSpecification parse_all() {
    LocatedSpecification out;
    while (look_.kind != TokenKind::End) {
      out.locations.push_back(look_.loc);
      out.spec.declarations.push_back(parse_form());
    }
    return out;
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const Token& at, const std::string& msg) {
    throw ParseError(code, msg, src_.origin, at.loc.line, at.loc.column);
  }

  [[noreturn]] void expected(const std::string& what) {
    fail(ErrorCode::ParseError, look_, "expected " + what + ", found " + describe(look_));
  }

  Token take() {
    Token t = look_;
    look_ = lexer_.next();
    return t;
  }

  void expect(TokenKind kind, const char* what) {
    if (look_.kind != kind) expected(what);
    take();
  }

  bool at_symbol(std::string_view word) const {
    return look_.kind == TokenKind::Symbol && look_.text == word;
  }

  void expect_word(std::string_view word) {
    if (!at_symbol(word)) expected("'" + std::string(word) + "'");
    take();
  }

  ComponentName name() {
    if (look_.kind != TokenKind::Symbol || !ComponentName::is_valid(look_.text)) {
      expected("component name");
    }
    return ComponentName(std::string(take().text));
  }

  DataType type() {
    if (look_.kind != TokenKind::Symbol) expected("type (Bool, Int, String or Picture)");
    auto parsed = parse_data_type(look_.text);
    if (!parsed) {
      fail(ErrorCode::UnknownType, look_,
           "unknown type '" + std::string(look_.text) +
               "'; expected Bool, Int, String or Picture");
    }
    take();
    return *parsed;
  }

  Declaration parse_form() {
    expect(TokenKind::LParen, "'('");
    if (look_.kind != TokenKind::Symbol) expected("declaration keyword");
    const Token head = take();
    if (head.text == "define-source") {
      auto n = name();
      auto t = type();
      expect(TokenKind::RParen, "')'");
      return SourceDecl{std::move(n), t};
    }
    if (head.text == "define-action") {
      auto n = name();
      auto t = type();
      expect(TokenKind::RParen, "')'");
      return ActionDecl{std::move(n), t};
    }
    if (head.text == "define-context") {
      auto n = name();
      auto t = type();
      expect(TokenKind::LBracket, "'['");
      auto contract = context_contract();
      expect(TokenKind::RBracket, "']'");
      expect(TokenKind::RParen, "')'");
      return ContextDecl{std::move(n), t, std::move(contract)};
    }
    if (head.text == "define-controller") {
      auto n = name();
      expect(TokenKind::LBracket, "'['");
      expect_word("when-provided");
      auto trigger = name();
      expect_word("do");
      auto action = name();
      expect(TokenKind::RBracket, "']'");
      expect(TokenKind::RParen, "')'");
      return ControllerDecl{std::move(n), std::move(trigger), std::move(action)};
    }
    fail(ErrorCode::UnknownKeyword, head,
         "unknown keyword '" + std::string(head.text) +
             "'; expected define-source, define-action, define-context or "
             "define-controller");
  }

  InteractionContract context_contract() {
    if (look_.kind != TokenKind::Symbol) expected("'when-required' or 'when-provided'");
    const Token head = take();
    if (head.text == "when-required") {
      InteractionContract c{WhenRequired{}, std::nullopt, PublishSpec::NoPublish};
      if (at_symbol("get")) {
        take();
        c.get_target = name();
      }
      if (look_.kind != TokenKind::RBracket) {
        expected(c.get_target ? "']'" : "'get' or ']'");
      }
      return c;
    }
    if (head.text == "when-provided") {
      InteractionContract c{WhenProvided{name()}, std::nullopt, PublishSpec::NoPublish};
      if (at_symbol("get")) {
        take();
        c.get_target = name();
      }
      if (at_symbol("always_publish")) {
        c.publish = PublishSpec::AlwaysPublish;
      } else if (at_symbol("maybe_publish")) {
        c.publish = PublishSpec::MaybePublish;
      } else {
        expected(c.get_target ? "'always_publish' or 'maybe_publish'"
                              : "'get', 'always_publish' or 'maybe_publish'");
      }
      take();
      return c;
    }
    fail(ErrorCode::UnknownKeyword, head,
         "unknown keyword '" + std::string(head.text) +
             "'; expected when-required or when-provided");
  }

  const SourceText& src_;
  Lexer lexer_;
  Token look_;
};

std::string contract_text(const InteractionContract& c) {
  std::string out = "[";
  if (const ComponentName* trigger = c.trigger()) {
    out += "when-provided " + trigger->str();
  } else {
    out += "when-required";
  }
  if (c.get_target) out += " get " + c.get_target->str();
  switch (c.publish) {
    case PublishSpec::NoPublish: break;
    case PublishSpec::AlwaysPublish: out += " always_publish"; break;
    case PublishSpec::MaybePublish: out += " maybe_publish"; break;
  }
  return out + "]";
}

}  // namespace

LocatedSpecification parse_located(const SourceText& text) {
  return Parser(text).parse_all();
}

Specification parse(const SourceText& text) { return parse_located(text).spec; }

std::string pretty_print(const Declaration& decl) {
  struct Printer {
    std::string operator()(const SourceDecl& d) const {
      return "(define-source " + d.name.str() + " " + std::string(to_string(d.out_type)) + ")";
    }
    std::string operator()(const ActionDecl& d) const {
      return "(define-action " + d.name.str() + " " + std::string(to_string(d.in_type)) + ")";
    }
    std::string operator()(const ContextDecl& d) const {
      return "(define-context " + d.name.str() + " " + std::string(to_string(d.out_type)) +
             " " + contract_text(d.contract) + ")";
    }
    std::string operator()(const ControllerDecl& d) const {
      return "(define-controller " + d.name.str() + " [when-provided " + d.trigger.str() +
             " do " + d.action.str() + "])";
    }
  };
  return std::visit(Printer{}, decl.variant());
}

std::string pretty_print(const Specification& spec) {
  std::string out;
  for (const auto& d : spec.declarations) {
    out += pretty_print(d);
    out += '\n';
  }
  return out;
}

}  // namespace scc
