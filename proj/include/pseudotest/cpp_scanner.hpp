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

// A small C++ source scanner for the host adapter. It tokenizes a file,
// tracks namespace and class scopes, and reports every function definition
// with a body: its qualified name, parameter types, return type, body span,
// top-level statement count and whether it is a one-statement field
// accessor. It is not a parser; constructs it does not understand are
// skipped as opaque blocks.

#ifndef PSEUDOTEST_CPP_SCANNER_HPP
#define PSEUDOTEST_CPP_SCANNER_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pseudotest/model.hpp"
#include "pseudotest/util.hpp"

namespace pseudotest::cpp {

class ScanError : public Error {
 public:
  using Error::Error;
};

enum class TokenKind { kIdentifier, kNumber, kString, kChar, kPunct };

struct Token {
  TokenKind kind = TokenKind::kPunct;
  std::string text;
  std::size_t begin = 0;  // byte offsets into the source
  std::size_t end = 0;
  int line = 1;

  bool is(std::string_view t) const { return text == t; }
  bool ident() const { return kind == TokenKind::kIdentifier; }
};

namespace detail {

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace detail

// Comments and preprocessor lines are dropped. Literals become single tokens.
inline std::vector<Token> tokenize(std::string_view src, std::string_view file = "") {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  bool line_start = true;
  const std::size_t n = src.size();
  auto fail = [&](const std::string& what) {
    throw ScanError(std::string(file) + ":" + std::to_string(line) + ": " + what);
  };
  auto skip_quoted = [&](char quote) {
    ++i;
    while (i < n && src[i] != quote) {
      if (src[i] == '\\') ++i;
      if (i < n && src[i] == '\n') ++line;
      ++i;
    }
    if (i >= n) fail("unterminated literal");
    ++i;
  };
  while (i < n) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      line_start = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      const auto close = src.find("*/", i + 2);
      if (close == std::string_view::npos) fail("unterminated comment");
      line += static_cast<int>(std::count(src.begin() + static_cast<std::ptrdiff_t>(i),
                                          src.begin() + static_cast<std::ptrdiff_t>(close), '\n'));
      i = close + 2;
      continue;
    }
    if (c == '#' && line_start) {
      // Preprocessor directive, with backslash continuations.
      while (i < n && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < n && src[i + 1] == '\n') {
          ++line;
          i += 2;
          continue;
        }
        ++i;
      }
      continue;
    }
    line_start = false;
    Token tok;
    tok.begin = i;
    tok.line = line;
    if (detail::ident_start(c)) {
      std::size_t j = i;
      while (j < n && detail::ident_char(src[j])) ++j;
      const std::string_view word = src.substr(i, j - i);
      const bool prefix = word == "R" || word == "u8" || word == "u" || word == "U" ||
                          word == "L" || word == "u8R" || word == "uR" || word == "UR" ||
                          word == "LR";
      if (prefix && j < n && (src[j] == '"' || src[j] == '\'')) {
        if (word.back() == 'R' && src[j] == '"') {
          const auto paren = src.find('(', j);
          if (paren == std::string_view::npos) fail("malformed raw string");
          const std::string terminator =
              ")" + std::string(src.substr(j + 1, paren - j - 1)) + "\"";
          const auto close = src.find(terminator, paren);
          if (close == std::string_view::npos) fail("unterminated raw string");
          line += static_cast<int>(std::count(src.begin() + static_cast<std::ptrdiff_t>(j),
                                              src.begin() + static_cast<std::ptrdiff_t>(close),
                                              '\n'));
          i = close + terminator.size();
        } else {
          i = j;
          skip_quoted(src[j]);
        }
        tok.kind = src[j] == '"' ? TokenKind::kString : TokenKind::kChar;
      } else {
        i = j;
        tok.kind = TokenKind::kIdentifier;
      }
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i + 1;
      while (j < n) {
        const char d = src[j];
        if (detail::ident_char(d) || d == '.' || d == '\'') {
          ++j;
        } else if ((d == '+' || d == '-') &&
                   (src[j - 1] == 'e' || src[j - 1] == 'E' || src[j - 1] == 'p' ||
                    src[j - 1] == 'P')) {
          ++j;
        } else {
          break;
        }
      }
      i = j;
      tok.kind = TokenKind::kNumber;
    } else if (c == '"' || c == '\'') {
      skip_quoted(c);
      tok.kind = c == '"' ? TokenKind::kString : TokenKind::kChar;
    } else {
      tok.kind = TokenKind::kPunct;
      if (i + 1 < n && ((c == ':' && src[i + 1] == ':') || (c == '-' && src[i + 1] == '>')))
        i += 2;
      else
        ++i;
    }
    tok.end = i;
    tok.text = std::string(src.substr(tok.begin, tok.end - tok.begin));
    out.push_back(std::move(tok));
  }
  return out;
}

struct ScannedFunction {
  FunctionUnderTest info;
  std::size_t body_open = 0;   // offset of '{'
  std::size_t body_close = 0;  // offset of the matching '}'
  bool is_constexpr = false;
  std::vector<std::string> param_names;
};

namespace detail {

inline const std::set<std::string, std::less<>>& specifier_words() {
  static const std::set<std::string, std::less<>> words = {
      "inline", "static",   "virtual", "explicit", "friend",    "extern",
      "typename", "mutable", "register", "thread_local", "constexpr", "consteval",
      "constinit"};
  return words;
}

inline const std::set<std::string, std::less<>>& integer_words() {
  static const std::set<std::string, std::less<>> words = {
      "int",      "long",      "short",     "unsigned",  "signed",    "size_t",
      "ssize_t",  "ptrdiff_t", "intptr_t",  "uintptr_t", "int8_t",    "int16_t",
      "int32_t",  "int64_t",   "uint8_t",   "uint16_t",  "uint32_t",  "uint64_t",
      "intmax_t", "uintmax_t", "std::size_t", "std::ptrdiff_t", "std::intptr_t",
      "std::uintptr_t", "std::int8_t", "std::int16_t", "std::int32_t", "std::int64_t",
      "std::uint8_t", "std::uint16_t", "std::uint32_t", "std::uint64_t",
      "std::intmax_t", "std::uintmax_t"};
  return words;
}

// Joins tokens, inserting a space only between two word-like tokens.
inline std::string join_tokens(const std::vector<Token>& toks, std::size_t from,
                               std::size_t to) {
  std::string out;
  bool prev_word = false;
  for (std::size_t k = from; k < to; ++k) {
    const bool word = toks[k].kind != TokenKind::kPunct;
    if (word && prev_word) out += ' ';
    out += toks[k].text;
    prev_word = word;
  }
  return out;
}

inline std::size_t match_forward(const std::vector<Token>& toks, std::size_t open,
                                 std::string_view o, std::string_view c) {
  int depth = 0;
  for (std::size_t k = open; k < toks.size(); ++k) {
    if (toks[k].is(o)) ++depth;
    else if (toks[k].is(c) && --depth == 0) return k;
  }
  return toks.size();
}

inline std::size_t match_backward(const std::vector<Token>& toks, std::size_t close,
                                  std::string_view o, std::string_view c) {
  int depth = 0;
  for (std::size_t k = close + 1; k-- > 0;) {
    if (toks[k].is(c)) ++depth;
    else if (toks[k].is(o) && --depth == 0) return k;
  }
  return toks.size();
}

// Maps return-type tokens to a return kind. References and pointers are
// objects.
inline ReturnType map_return_type(const std::vector<Token>& toks) {
  std::vector<std::string> words;
  bool indirect = false;
  for (const auto& t : toks) {
    if (t.is("&") || t.is("*")) indirect = true;
    if (t.ident() && !specifier_words().count(t.text) && t.text != "const" &&
        t.text != "volatile")
      words.push_back(t.text);
  }
  std::vector<Token> kept;
  for (const auto& t : toks) {
    if (t.ident() && (specifier_words().count(t.text))) continue;
    kept.push_back(t);
  }
  const std::string spelled = join_tokens(kept, 0, kept.size());
  if (indirect) return {ReturnKind::kObject, spelled};
  std::string plain;
  {
    std::vector<Token> no_cv;
    for (const auto& t : kept)
      if (!(t.ident() && (t.text == "const" || t.text == "volatile"))) no_cv.push_back(t);
    plain = join_tokens(no_cv, 0, no_cv.size());
  }
  if (plain == "void") return {ReturnKind::kVoid, ""};
  if (plain == "bool") return {ReturnKind::kBoolean, ""};
  if (plain == "char") return {ReturnKind::kCharacter, ""};
  if (plain == "float" || plain == "double" || plain == "long double")
    return {ReturnKind::kFloating, ""};
  if (plain == "std::string" || plain == "string") return {ReturnKind::kString, ""};
  if (!words.empty() && std::all_of(words.begin(), words.end(), [&](const std::string& w) {
        return integer_words().count(w) != 0 || w == "std";
      }) &&
      plain.find('<') == std::string::npos) {
    return {ReturnKind::kInteger, ""};
  }
  if (integer_words().count(plain)) return {ReturnKind::kInteger, ""};
  return {ReturnKind::kObject, spelled};
}

// Top-level statements in the token range (open, close).
inline int count_statements(const std::vector<Token>& toks, std::size_t open,
                            std::size_t close) {
  int count = 0;
  int paren = 0;
  int brace = 0;
  bool pending = false;  // tokens seen since the last statement boundary
  for (std::size_t k = open + 1; k < close; ++k) {
    const auto& t = toks[k];
    if (t.is("(") || t.is("[")) ++paren;
    else if (t.is(")") || t.is("]")) --paren;
    else if (t.is("{")) ++brace;
    else if (t.is("}")) {
      if (--brace == 0 && paren == 0) {
        const bool continues =
            k + 1 < close && (toks[k + 1].is("else") || toks[k + 1].is("catch") ||
                              toks[k + 1].is("while") || toks[k + 1].is(";") ||
                              toks[k + 1].is(",") || toks[k + 1].is(")"));
        if (!continues) {
          ++count;
          pending = false;
        }
        continue;
      }
    } else if (t.is(";") && paren == 0 && brace == 0) {
      if (pending) ++count;
      pending = false;
      continue;
    }
    pending = true;
  }
  if (pending) ++count;
  return count;
}

// `return field;`, `return this->field;`, `field = param;`,
// `this->field = param;` or `field = std::move(param);` where `field` is not
// a parameter.
inline bool is_trivial_accessor(const std::vector<Token>& toks, std::size_t open,
                                std::size_t close, const std::vector<std::string>& params) {
  std::vector<std::string> body;
  for (std::size_t k = open + 1; k < close; ++k) body.push_back(toks[k].text);
  if (body.empty() || body.back() != ";") return false;
  body.pop_back();
  auto is_param = [&](const std::string& s) {
    return std::find(params.begin(), params.end(), s) != params.end();
  };
  auto is_field = [&](const std::string& s) {
    static const std::set<std::string, std::less<>> literals = {"true", "false", "nullptr",
                                                                "this"};
    return !s.empty() && ident_start(s[0]) && !literals.count(s) && !is_param(s);
  };
  if (!body.empty() && body.front() == "this" && body.size() >= 3 && body[1] == "->")
    body.erase(body.begin(), body.begin() + 2);
  if (body.size() == 2 && body[0] == "return") return is_field(body[1]);
  if (body.size() == 4 && body[0] == "return" && body[1] == "this" && body[2] == "->")
    return is_field(body[3]);
  if (body.size() == 3 && body[1] == "=") return is_field(body[0]) && is_param(body[2]);
  if (body.size() == 8 && body[1] == "=" && body[2] == "std" && body[3] == "::" &&
      body[4] == "move" && body[5] == "(" && body[7] == ")")
    return is_field(body[0]) && is_param(body[6]);
  return false;
}

class Scanner {
 public:
  Scanner(std::vector<Token> toks, std::string file)
      : toks_(std::move(toks)), file_(std::move(file)) {}

  std::vector<ScannedFunction> run() {
    std::size_t i = 0;
    scan_scope(i, {}, false);
    if (i < toks_.size()) fail(toks_[i], "unbalanced '}'");
    return std::move(found_);
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& what) const {
    throw ScanError(file_ + ":" + std::to_string(at.line) + ": " + what);
  }

  std::size_t close_of(std::size_t open, std::string_view o, std::string_view c) const {
    const std::size_t k = match_forward(toks_, open, o, c);
    if (k >= toks_.size()) fail(toks_[open], std::string("unbalanced '") + std::string(o) + "'");
    return k;
  }

  // Index just past a leading `template <...>` and attribute prefix.
  std::size_t skip_prefix(std::size_t from, std::size_t to) const {
    std::size_t k = from;
    while (k < to) {
      if (toks_[k].is("template") && k + 1 < to && toks_[k + 1].is("<")) {
        int depth = 0;
        std::size_t j = k + 1;
        for (; j < to; ++j) {
          if (toks_[j].is("<")) ++depth;
          else if (toks_[j].is(">") && --depth == 0) break;
          else if (toks_[j].is("(")) j = match_forward(toks_, j, "(", ")");
        }
        k = j + 1;
      } else if (toks_[k].is("[") && k + 1 < to && toks_[k + 1].is("[")) {
        k = match_forward(toks_, k, "[", "]") + 1;
      } else {
        break;
      }
    }
    return k;
  }

  void scan_scope(std::size_t& i, const std::vector<std::string>& container, bool in_class) {
    std::size_t head = i;
    while (i < toks_.size()) {
      const Token& t = toks_[i];
      if (t.is("}")) return;
      if (t.is(";")) {
        head = ++i;
        continue;
      }
      if (in_class && (t.is("public") || t.is("private") || t.is("protected")) &&
          i + 1 < toks_.size() && toks_[i + 1].is(":") && i == head) {
        i += 2;
        head = i;
        continue;
      }
      if (t.is("(")) {
        i = close_of(i, "(", ")") + 1;
        continue;
      }
      if (t.is("[")) {
        i = close_of(i, "[", "]") + 1;
        continue;
      }
      if (t.is("{")) {
        i = handle_block(head, i, container, in_class);
        head = i;
        continue;
      }
      ++i;
    }
  }

  // Returns the index following the block (and its declaration, if any).
  std::size_t handle_block(std::size_t head, std::size_t open,
                           const std::vector<std::string>& container, bool in_class) {
    const std::size_t start = skip_prefix(head, open);
    const Token* first = start < open ? &toks_[start] : nullptr;

    if (first && (first->is("namespace") ||
                  (first->is("inline") && start + 1 < open && toks_[start + 1].is("namespace")))) {
      std::vector<std::string> inner = container;
      for (std::size_t k = start; k < open; ++k) {
        if (toks_[k].ident() && !toks_[k].is("namespace") && !toks_[k].is("inline"))
          inner.push_back(toks_[k].text);
      }
      std::size_t i = open + 1;
      scan_scope(i, inner, false);
      if (i >= toks_.size()) fail(toks_[open], "unbalanced '{'");
      return i + 1;
    }
    if (first && first->is("extern") && start + 1 < open &&
        toks_[start + 1].kind == TokenKind::kString && start + 2 == open) {
      std::size_t i = open + 1;
      scan_scope(i, container, false);
      if (i >= toks_.size()) fail(toks_[open], "unbalanced '{'");
      return i + 1;
    }
    if (first && (first->is("class") || first->is("struct") || first->is("union")) &&
        !has_top_level_paren(start, open)) {
      std::string name;
      for (std::size_t k = start + 1; k < open; ++k) {
        if (toks_[k].is(":")) break;
        if (toks_[k].is("<")) {
          int depth = 0;
          for (; k < open; ++k) {
            if (toks_[k].is("<")) ++depth;
            else if (toks_[k].is(">") && --depth == 0) break;
          }
          continue;
        }
        if (toks_[k].is("(")) {
          k = match_forward(toks_, k, "(", ")");
          continue;
        }
        if (toks_[k].ident() && !toks_[k].is("final")) name = toks_[k].text;
      }
      std::vector<std::string> inner = container;
      inner.push_back(name.empty() ? "(anonymous)" : name);
      std::size_t i = open + 1;
      scan_scope(i, inner, true);
      if (i >= toks_.size()) fail(toks_[open], "unbalanced '{'");
      // The declaration continues up to its ';' (e.g. `} instance;`).
      return i + 1;
    }
    if (first && first->is("enum")) return close_of(open, "{", "}") + 1;

    if (auto fn = function_head(start, open)) {
      // Braces right after an initializer entry name belong to that entry;
      // the body is the first brace that follows something else.
      while (fn->has_init_list && (toks_[open - 1].ident() || toks_[open - 1].is(">"))) {
        std::size_t k = close_of(open, "{", "}") + 1;
        while (k < toks_.size() && !toks_[k].is("{")) {
          if (toks_[k].is("(")) k = close_of(k, "(", ")");
          ++k;
        }
        if (k >= toks_.size()) fail(toks_[open], "constructor without a body");
        open = k;
      }
      const std::size_t close = close_of(open, "{", "}");
      record(*fn, open, close, container, in_class);
      return close + 1;
    }
    return close_of(open, "{", "}") + 1;
  }

  bool has_top_level_paren(std::size_t from, std::size_t to) const {
    for (std::size_t k = from; k < to; ++k) {
      if (toks_[k].is("(")) return true;
    }
    return false;
  }

  struct Head {
    std::size_t decl_start = 0;   // after template/attribute prefix
    std::size_t name_begin = 0;   // first token of the qualified name
    std::size_t name_last = 0;    // last token of the unqualified name
    std::size_t lparen = 0;
    std::size_t rparen = 0;
    std::string name;
    std::vector<std::string> qualifiers;
    std::vector<Token> return_tokens;
    bool has_init_list = false;
    bool is_constexpr = false;
    bool is_destructor = false;
  };

  std::optional<Head> function_head(std::size_t start, std::size_t open) const {
    static const std::set<std::string, std::less<>> not_names = {
        "decltype", "alignas", "__attribute__", "__declspec", "noexcept", "sizeof",
        "requires", "if", "for", "while", "switch", "return", "catch", "throw"};
    Head h;
    h.decl_start = start;
    std::size_t k = start;
    for (; k < open; ++k) {
      const Token& t = toks_[k];
      if (t.is("=")) {
        // `=` only belongs to a head as part of an operator name.
        std::size_t j = k;
        while (j > start && toks_[j - 1].kind == TokenKind::kPunct && !toks_[j - 1].is("("))
          --j;
        if (j == start || !toks_[j - 1].is("operator")) return std::nullopt;
      }
      if (!t.is("(")) continue;
      if (k == start) return std::nullopt;
      const Token& prev = toks_[k - 1];
      if (prev.ident() && not_names.count(prev.text)) {
        k = match_forward(toks_, k, "(", ")");
        continue;
      }
      if (prev.is("operator") && k + 2 < open && toks_[k + 1].is(")") &&
          toks_[k + 2].is("(")) {
        h.name = "operator()";
        h.name_last = k - 1;
        h.lparen = k + 2;
        break;
      }
      if (prev.ident()) {
        if (k >= 2 && toks_[k - 2].is("operator")) {
          h.name = "operator " + prev.text;
          h.name_last = k - 2;
        } else {
          h.name = prev.text;
          h.name_last = k - 1;
        }
        h.lparen = k;
        break;
      }
      if (prev.kind == TokenKind::kPunct) {
        // operator symbols such as operator== or operator[]
        std::size_t j = k - 1;
        while (j > start && toks_[j].kind == TokenKind::kPunct) --j;
        if (toks_[j].is("operator")) {
          h.name = "operator" + join_tokens(toks_, j + 1, k);
          h.name_last = j;
          h.lparen = k;
          break;
        }
      }
      return std::nullopt;
    }
    if (h.name.empty()) return std::nullopt;
    h.rparen = match_forward(toks_, h.lparen, "(", ")");
    if (h.rparen >= open) return std::nullopt;

    // Qualified name: walk back over `::` separated parts.
    std::size_t b = h.name_last;
    if (b > start && toks_[b - 1].is("~")) {
      --b;
      h.is_destructor = true;
      h.name = "~" + h.name;
    }
    while (b >= start + 2 && toks_[b - 1].is("::")) {
      std::size_t q = b - 2;
      if (toks_[q].is(">")) {
        int depth = 0;
        while (q > start) {
          if (toks_[q].is(">")) ++depth;
          else if (toks_[q].is("<") && --depth == 0) break;
          --q;
        }
        if (q == start) break;
        --q;
      }
      if (!toks_[q].ident()) break;
      h.qualifiers.insert(h.qualifiers.begin(), toks_[q].text);
      b = q;
    }
    if (b >= 1 && b > start && toks_[b - 1].is("::")) --b;  // leading global ::
    h.name_begin = b;
    for (std::size_t r = start; r < b; ++r) {
      if (toks_[r].is("constexpr") || toks_[r].is("consteval")) h.is_constexpr = true;
      h.return_tokens.push_back(toks_[r]);
    }

    // After the parameter list: qualifiers, trailing return, init list.
    std::vector<Token> trailing;
    bool in_trailing = false;
    for (std::size_t r = h.rparen + 1; r < open; ++r) {
      const Token& t = toks_[r];
      if (t.is(":") && !in_trailing) {
        h.has_init_list = true;
        break;
      }
      if (t.is("->")) {
        in_trailing = true;
        continue;
      }
      if (t.is("noexcept") || t.is("throw")) {
        if (r + 1 < open && toks_[r + 1].is("(")) r = match_forward(toks_, r + 1, "(", ")");
        continue;
      }
      if (t.is("requires")) break;
      if (in_trailing && !t.is("override") && !t.is("final")) trailing.push_back(t);
    }
    if (!trailing.empty()) {
      std::vector<Token> kept;
      for (const auto& t : h.return_tokens)
        if (!t.is("auto")) kept.push_back(t);
      for (const auto& t : trailing) kept.push_back(t);
      h.return_tokens = std::move(kept);
    }
    // Anything between the parameter list and the body other than the above
    // means this is not a plain definition (e.g. `= default`).
    return h;
  }

  void record(const Head& h, std::size_t open, std::size_t close,
              const std::vector<std::string>& container, bool in_class) {
    ScannedFunction fn;
    auto& info = fn.info;
    std::vector<std::string> path = container;
    for (const auto& q : h.qualifiers) path.push_back(q);
    std::string joined;
    for (const auto& p : path) joined += (joined.empty() ? "" : "::") + p;
    info.id.container = joined;
    info.id.name = h.name;

    // Parameters: split at top-level commas, drop defaults and names.
    std::vector<std::string> types;
    std::size_t seg = h.lparen + 1;
    int depth = 0;
    for (std::size_t k = h.lparen + 1; k <= h.rparen; ++k) {
      const Token& t = toks_[k];
      const bool end = k == h.rparen || (depth == 0 && t.is(","));
      if (t.is("(") || t.is("<") || t.is("[") || t.is("{")) ++depth;
      else if ((t.is(")") || t.is(">") || t.is("]") || t.is("}")) && k != h.rparen) --depth;
      if (!end) continue;
      std::size_t stop = k;
      for (std::size_t r = seg; r < k; ++r) {
        if (toks_[r].is("=")) {
          stop = r;
          break;
        }
      }
      if (stop > seg) {
        std::size_t type_end = stop;
        const Token& last = toks_[stop - 1];
        const bool named = stop - seg >= 2 && last.ident() && !toks_[stop - 2].is("::") &&
                           !specifier_words().count(last.text) && last.text != "const" &&
                           !integer_words().count(last.text) && last.text != "char" &&
                           last.text != "double" && last.text != "float" && last.text != "bool";
        if (named) {
          type_end = stop - 1;
          fn.param_names.push_back(last.text);
        }
        const std::string type = join_tokens(toks_, seg, type_end);
        if (type != "void" || stop - seg > 1) types.push_back(type);
      }
      seg = k + 1;
    }
    info.id.signature.clear();
    for (std::size_t p = 0; p < types.size(); ++p)
      info.id.signature += (p ? "," : "") + types[p];

    info.id.source_locator = {file_, toks_[h.name_begin].line, toks_[close].line};
    const std::string owner = path.empty() ? "" : path.back();
    const bool member = in_class || !h.qualifiers.empty();
    info.is_constructor = h.is_destructor || (member && h.name == owner);
    if (info.is_constructor) {
      info.return_type = {ReturnKind::kVoid, ""};
    } else {
      info.return_type = map_return_type(h.return_tokens);
    }
    info.statement_count = count_statements(toks_, open, close);
    info.is_trivial_accessor = member && info.statement_count == 1 &&
                               is_trivial_accessor(toks_, open, close, fn.param_names);
    fn.body_open = toks_[open].begin;
    fn.body_close = toks_[close].begin;
    fn.is_constexpr = h.is_constexpr;
    found_.push_back(std::move(fn));
  }

  std::vector<Token> toks_;
  std::string file_;
  std::vector<ScannedFunction> found_;
};

}  // namespace detail

// Function definitions in source order. Functions whose key repeats within
// the file (const overloads and the like) get a `#n` suffix on the signature.
inline std::vector<ScannedFunction> scan_source(std::string_view text, const std::string& file) {
  auto found = detail::Scanner(tokenize(text, file), file).run();
  std::map<std::string, int> seen;
  for (auto& fn : found) {
    const int n = ++seen[fn.info.id.key()];
    if (n > 1) fn.info.id.signature += "#" + std::to_string(n);
  }
  return found;
}

inline bool is_cpp_source(const fs::path& path) {
  static const std::set<std::string, std::less<>> exts = {
      ".h", ".hh", ".hpp", ".hxx", ".inl", ".ipp", ".c", ".cc", ".cpp", ".cxx"};
  return exts.count(path.extension().string()) != 0;
}

// Replaces the text between the braces of `fn` with `replacement`.
inline std::string replace_body(std::string_view text, const ScannedFunction& fn,
                                std::string_view replacement) {
  std::string out(text.substr(0, fn.body_open + 1));
  if (!replacement.empty()) {
    out += ' ';
    out += replacement;
    out += ' ';
  }
  out += text.substr(fn.body_close);
  return out;
}

}  // namespace pseudotest::cpp

#endif  // PSEUDOTEST_CPP_SCANNER_HPP
