// Copyright 2026 The pseudotest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Statement and expression language used by fixture function bodies and test
// assertions. It is total and deterministic: integer arithmetic wraps,
// division by zero and type mismatches raise EvalError, and call depth is
// bounded.
//
//   statement  := "return" [expr] | name ("=" | "+=" | "-=" | "*=") expr | expr
//   expr       := or ["?" expr ":" expr]
//   or         := and {"||" and}
//   and        := equality {"&&" equality}
//   equality   := relation {("==" | "!=") relation}
//   relation   := additive {("<" | "<=" | ">" | ">=") additive}
//   additive   := term {("+" | "-") term}
//   term       := unary {("*" | "/" | "%") unary}
//   unary      := ("!" | "-") unary | primary
//   primary    := literal | name | name "(" [expr {"," expr}] ")" | "(" expr ")"

#ifndef PSEUDOTEST_FIXTURE_LANG_HPP
#define PSEUDOTEST_FIXTURE_LANG_HPP

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pseudotest/model.hpp"
#include "pseudotest/util.hpp"

namespace pseudotest::fixture {

class ParseError : public Error {
 public:
  using Error::Error;
};

// Runtime failure inside fixture code. A test hitting one fails.
class EvalError : public Error {
 public:
  using Error::Error;
};

struct Void {
  friend bool operator==(Void, Void) { return true; }
};

using Value = std::variant<Void, bool, std::int64_t, double, char, std::string>;

inline std::string type_name(const Value& value) {
  switch (value.index()) {
    case 0: return "void";
    case 1: return "boolean";
    case 2: return "int";
    case 3: return "double";
    case 4: return "char";
    default: return "string";
  }
}

inline std::string escape_literal(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\'': out += "\\'"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

// Source form of a value; parse_expression(render(v)) evaluates to v.
inline std::string render(const Value& value) {
  struct Visitor {
    std::string operator()(Void) const { return "void"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const {
      std::string text = format_double(d);
      if (text.find_first_of(".eEn") == std::string::npos) text += ".0";
      return text;
    }
    std::string operator()(char c) const {
      return "'" + escape_literal(std::string(1, c)) + "'";
    }
    std::string operator()(const std::string& s) const {
      return "\"" + escape_literal(s) + "\"";
    }
  };
  return std::visit(Visitor{}, value);
}

// ---------------------------------------------------------------------------
// Syntax tree

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { kLiteral, kName, kUnary, kBinary, kTernary, kCall };
  Kind kind = Kind::kLiteral;
  Value literal;
  std::string name;  // variable or callee; operator for unary/binary
  std::vector<ExprPtr> args;
};

struct Statement {
  enum class Kind { kReturn, kAssign, kExpr };
  Kind kind = Kind::kExpr;
  std::string target;    // kAssign
  std::string op;        // "=", "+=", "-=", "*="
  ExprPtr expr;          // null for a bare "return"
  std::string text;      // original source
};

namespace detail {

struct Token {
  enum class Kind { kEnd, kNumber, kString, kChar, kName, kPunct };
  Kind kind = Kind::kEnd;
  std::string text;
  Value value;
  std::size_t column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token tok;
      tok.column = pos_ + 1;
      if (pos_ >= src_.size()) {
        out.push_back(tok);
        return out;
      }
      const char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number(tok);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          ++pos_;
        }
        tok.kind = Token::Kind::kName;
        tok.text = std::string(src_.substr(start, pos_ - start));
      } else if (c == '"') {
        tok.kind = Token::Kind::kString;
        tok.value = lex_quoted('"');
      } else if (c == '\'') {
        tok.kind = Token::Kind::kChar;
        const std::string text = lex_quoted('\'');
        if (text.size() != 1) fail("character literal must hold one character");
        tok.value = text[0];
      } else {
        tok.kind = Token::Kind::kPunct;
        static constexpr std::string_view kTwo[] = {"==", "!=", "<=", ">=", "&&",
                                                    "||", "+=", "-=", "*="};
        for (auto two : kTwo) {
          if (src_.substr(pos_, 2) == two) tok.text = std::string(two);
        }
        if (tok.text.empty()) {
          static constexpr std::string_view kOne = "+-*/%<>!?:(),=";
          if (kOne.find(c) == std::string_view::npos)
            fail(std::string("unexpected character '") + c + "'");
          tok.text = std::string(1, c);
        }
        pos_ += tok.text.size();
      }
      out.push_back(std::move(tok));
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) +
                     " in '" + std::string(src_) + "'");
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  void lex_number(Token& tok) {
    const std::size_t start = pos_;
    bool floating = false;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '.' && !floating) {
        floating = true;
        ++pos_;
      } else {
        break;
      }
    }
    tok.kind = Token::Kind::kNumber;
    tok.text = std::string(src_.substr(start, pos_ - start));
    if (floating) {
      tok.value = std::strtod(tok.text.c_str(), nullptr);
    } else {
      errno = 0;
      const unsigned long long v = std::strtoull(tok.text.c_str(), nullptr, 10);
      if (errno == ERANGE || v > 9223372036854775807ULL)
        fail("integer literal out of range");
      tok.value = static_cast<std::int64_t>(v);
    }
  }

  std::string lex_quoted(char quote) {
    ++pos_;
    std::string text;
    while (true) {
      if (pos_ >= src_.size()) fail("unterminated literal");
      char c = src_[pos_++];
      if (c == quote) return text;
      if (c == '\\') {
        if (pos_ >= src_.size()) fail("unterminated escape");
        const char e = src_[pos_++];
        switch (e) {
          case 'n': c = '\n'; break;
          case 't': c = '\t'; break;
          case '\\': case '"': case '\'': c = e; break;
          default: fail(std::string("unknown escape \\") + e);
        }
      }
      text += c;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), tokens_(Lexer(src).run()) {}

  Statement statement() {
    Statement st;
    st.text = trim(src_);
    if (is_name("return")) {
      ++pos_;
      st.kind = Statement::Kind::kReturn;
      if (peek().kind != Token::Kind::kEnd) st.expr = expression();
    } else if (peek().kind == Token::Kind::kName && pos_ + 1 < tokens_.size() &&
               tokens_[pos_ + 1].kind == Token::Kind::kPunct &&
               (tokens_[pos_ + 1].text == "=" || tokens_[pos_ + 1].text == "+=" ||
                tokens_[pos_ + 1].text == "-=" || tokens_[pos_ + 1].text == "*=")) {
      st.kind = Statement::Kind::kAssign;
      st.target = tokens_[pos_].text;
      st.op = tokens_[pos_ + 1].text;
      pos_ += 2;
      st.expr = expression();
    } else {
      st.kind = Statement::Kind::kExpr;
      st.expr = expression();
    }
    expect_end();
    return st;
  }

  ExprPtr whole_expression() {
    auto e = expression();
    expect_end();
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool is_punct(std::string_view p) const {
    return peek().kind == Token::Kind::kPunct && peek().text == p;
  }
  bool is_name(std::string_view n) const {
    return peek().kind == Token::Kind::kName && peek().text == n;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(peek().column) +
                     " in '" + std::string(src_) + "'");
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Token::Kind::kEnd) fail("unexpected '" + peek().text + "'");
  }

  static ExprPtr make_binary(std::string op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::kBinary;
    e->name = std::move(op);
    e->args = {std::move(lhs), std::move(rhs)};
    return e;
  }

  ExprPtr expression() {
    auto cond = binary_level(0);
    if (!is_punct("?")) return cond;
    ++pos_;
    auto then_branch = expression();
    expect_punct(":");
    auto else_branch = expression();
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::kTernary;
    e->args = {cond, then_branch, else_branch};
    return e;
  }

  ExprPtr binary_level(int level) {
    static const std::vector<std::vector<std::string_view>> kLevels = {
        {"||"}, {"&&"}, {"==", "!="}, {"<", "<=", ">", ">="},
        {"+", "-"}, {"*", "/", "%"}};
    if (level == static_cast<int>(kLevels.size())) return unary();
    auto lhs = binary_level(level + 1);
    while (true) {
      std::string op;
      for (auto candidate : kLevels[level]) {
        if (is_punct(candidate)) op = std::string(candidate);
      }
      if (op.empty()) return lhs;
      ++pos_;
      lhs = make_binary(op, lhs, binary_level(level + 1));
    }
  }

  ExprPtr unary() {
    if (is_punct("!") || is_punct("-")) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::kUnary;
      e->name = peek().text;
      ++pos_;
      e->args = {unary()};
      return e;
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& tok = peek();
    auto e = std::make_shared<Expr>();
    switch (tok.kind) {
      case Token::Kind::kNumber:
      case Token::Kind::kString:
      case Token::Kind::kChar:
        e->kind = Expr::Kind::kLiteral;
        e->literal = tok.value;
        ++pos_;
        return e;
      case Token::Kind::kName:
        if (tok.text == "true" || tok.text == "false") {
          e->kind = Expr::Kind::kLiteral;
          e->literal = tok.text == "true";
          ++pos_;
          return e;
        }
        e->name = tok.text;
        ++pos_;
        if (is_punct("(")) {
          ++pos_;
          e->kind = Expr::Kind::kCall;
          if (!is_punct(")")) {
            e->args.push_back(expression());
            while (is_punct(",")) {
              ++pos_;
              e->args.push_back(expression());
            }
          }
          expect_punct(")");
        } else {
          e->kind = Expr::Kind::kName;
        }
        return e;
      case Token::Kind::kPunct:
        if (tok.text == "(") {
          ++pos_;
          auto inner = expression();
          expect_punct(")");
          return inner;
        }
        break;
      case Token::Kind::kEnd:
        fail("unexpected end of input");
    }
    fail("unexpected '" + tok.text + "'");
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Statement parse_statement(std::string_view source) {
  return detail::Parser(source).statement();
}

inline ExprPtr parse_expression(std::string_view source) {
  return detail::Parser(source).whole_expression();
}

// Names of all functions called anywhere in `expr`.
inline void collect_calls(const Expr& expr, std::vector<std::string>& out) {
  if (expr.kind == Expr::Kind::kCall) out.push_back(expr.name);
  for (const auto& arg : expr.args) collect_calls(*arg, out);
}

// ---------------------------------------------------------------------------
// Evaluation

class Environment {
 public:
  virtual ~Environment() = default;
  virtual Value lookup(const std::string& name) = 0;
  virtual Value call(const std::string& name, std::vector<Value> args) = 0;
};

namespace detail {

inline bool is_numeric(const Value& v) {
  return std::holds_alternative<std::int64_t>(v) ||
         std::holds_alternative<double>(v);
}
inline double as_double(const Value& v) {
  if (auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::get<double>(v);
}
inline std::int64_t wrap(std::uint64_t bits) {
  return static_cast<std::int64_t>(bits);
}
[[noreturn]] inline void type_error(const std::string& op, const Value& a,
                                    const Value& b) {
  throw EvalError("operator " + op + " not defined for " + type_name(a) +
                  " and " + type_name(b));
}

inline bool values_equal(const Value& a, const Value& b, const std::string& op) {
  if (is_numeric(a) && is_numeric(b)) {
    if (std::holds_alternative<std::int64_t>(a) &&
        std::holds_alternative<std::int64_t>(b)) {
      return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
    }
    return as_double(a) == as_double(b);
  }
  if (a.index() != b.index()) type_error(op, a, b);
  return a == b;
}

inline Value arithmetic(const std::string& op, const Value& a, const Value& b) {
  if (op == "+") {
    if (auto* s = std::get_if<std::string>(&a)) {
      if (auto* t = std::get_if<std::string>(&b)) return *s + *t;
      if (auto* c = std::get_if<char>(&b)) return *s + std::string(1, *c);
    }
  }
  if (!is_numeric(a) || !is_numeric(b)) type_error(op, a, b);
  if (std::holds_alternative<std::int64_t>(a) &&
      std::holds_alternative<std::int64_t>(b)) {
    const std::int64_t x = std::get<std::int64_t>(a);
    const std::int64_t y = std::get<std::int64_t>(b);
    const auto ux = static_cast<std::uint64_t>(x);
    const auto uy = static_cast<std::uint64_t>(y);
    if (op == "+") return wrap(ux + uy);
    if (op == "-") return wrap(ux - uy);
    if (op == "*") return wrap(ux * uy);
    if (y == 0) throw EvalError("integer division by zero");
    if (y == -1) return op == "/" ? wrap(0 - ux) : std::int64_t{0};
    return op == "/" ? x / y : x % y;
  }
  const double x = as_double(a);
  const double y = as_double(b);
  if (op == "+") return x + y;
  if (op == "-") return x - y;
  if (op == "*") return x * y;
  if (y == 0.0) throw EvalError("floating division by zero");
  return op == "/" ? x / y : std::fmod(x, y);
}

inline bool compare(const std::string& op, const Value& a, const Value& b) {
  int order = 0;
  if (is_numeric(a) && is_numeric(b)) {
    const double x = as_double(a);
    const double y = as_double(b);
    if (std::holds_alternative<std::int64_t>(a) &&
        std::holds_alternative<std::int64_t>(b)) {
      const auto i = std::get<std::int64_t>(a);
      const auto j = std::get<std::int64_t>(b);
      order = i < j ? -1 : (i > j ? 1 : 0);
    } else {
      order = x < y ? -1 : (x > y ? 1 : 0);
    }
  } else if (std::holds_alternative<char>(a) && std::holds_alternative<char>(b)) {
    order = std::get<char>(a) - std::get<char>(b);
  } else if (std::holds_alternative<std::string>(a) &&
             std::holds_alternative<std::string>(b)) {
    order = std::get<std::string>(a).compare(std::get<std::string>(b));
  } else {
    type_error(op, a, b);
  }
  if (op == "<") return order < 0;
  if (op == "<=") return order <= 0;
  if (op == ">") return order > 0;
  return order >= 0;
}

inline bool as_bool(const Value& v, const char* context) {
  if (auto* b = std::get_if<bool>(&v)) return *b;
  throw EvalError(std::string(context) + " requires boolean, got " +
                  type_name(v));
}

}  // namespace detail

inline Value evaluate(const Expr& expr, Environment& env) {
  using detail::as_bool;
  switch (expr.kind) {
    case Expr::Kind::kLiteral:
      return expr.literal;
    case Expr::Kind::kName:
      return env.lookup(expr.name);
    case Expr::Kind::kCall: {
      std::vector<Value> args;
      args.reserve(expr.args.size());
      for (const auto& arg : expr.args) args.push_back(evaluate(*arg, env));
      return env.call(expr.name, std::move(args));
    }
    case Expr::Kind::kTernary:
      return as_bool(evaluate(*expr.args[0], env), "?:")
                 ? evaluate(*expr.args[1], env)
                 : evaluate(*expr.args[2], env);
    case Expr::Kind::kUnary: {
      const Value v = evaluate(*expr.args[0], env);
      if (expr.name == "!") return !as_bool(v, "!");
      if (auto* i = std::get_if<std::int64_t>(&v))
        return detail::wrap(0 - static_cast<std::uint64_t>(*i));
      if (auto* d = std::get_if<double>(&v)) return -*d;
      throw EvalError("unary - not defined for " + type_name(v));
    }
    case Expr::Kind::kBinary: {
      const std::string& op = expr.name;
      if (op == "&&") {
        return as_bool(evaluate(*expr.args[0], env), "&&") &&
               as_bool(evaluate(*expr.args[1], env), "&&");
      }
      if (op == "||") {
        return as_bool(evaluate(*expr.args[0], env), "||") ||
               as_bool(evaluate(*expr.args[1], env), "||");
      }
      const Value a = evaluate(*expr.args[0], env);
      const Value b = evaluate(*expr.args[1], env);
      if (op == "==") return detail::values_equal(a, b, op);
      if (op == "!=") return !detail::values_equal(a, b, op);
      if (op == "<" || op == "<=" || op == ">" || op == ">=")
        return detail::compare(op, a, b);
      return detail::arithmetic(op, a, b);
    }
  }
  throw EvalError("malformed expression");
}

// Applies the arithmetic of a compound assignment ("+=" etc.).
inline Value compound(const std::string& op, const Value& current,
                      const Value& operand) {
  if (op == "=") return operand;
  return detail::arithmetic(op.substr(0, 1), current, operand);
}

// Converts `value` to the declared type, or throws EvalError.
inline Value coerce(const Value& value, const ReturnType& type,
                    std::string_view what) {
  auto mismatch = [&]() -> EvalError {
    return EvalError(std::string(what) + ": expected " +
                     std::string(to_string(type.kind)) + ", got " +
                     type_name(value));
  };
  switch (type.kind) {
    case ReturnKind::kVoid:
      if (!std::holds_alternative<Void>(value)) throw mismatch();
      return value;
    case ReturnKind::kBoolean:
      if (!std::holds_alternative<bool>(value)) throw mismatch();
      return value;
    case ReturnKind::kInteger:
      if (!std::holds_alternative<std::int64_t>(value)) throw mismatch();
      return value;
    case ReturnKind::kFloating:
      if (!detail::is_numeric(value)) throw mismatch();
      return detail::as_double(value);
    case ReturnKind::kCharacter:
      if (!std::holds_alternative<char>(value)) throw mismatch();
      return value;
    case ReturnKind::kString:
      if (!std::holds_alternative<std::string>(value)) throw mismatch();
      return value;
    case ReturnKind::kObject:
      if (std::holds_alternative<Void>(value)) throw mismatch();
      return value;
  }
  throw mismatch();
}

}  // namespace pseudotest::fixture

#endif  // PSEUDOTEST_FIXTURE_LANG_HPP
