// Copyright 2026 The spatch-lite Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spl/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace spl {
namespace {

constexpr std::array<std::string_view, 40> kKeywords = {
    "auto",     "bool",     "break",    "case",     "char",     "const",
    "continue", "default",  "do",       "double",   "else",     "enum",
    "extern",   "false",    "float",    "for",      "goto",     "if",
    "inline",   "int",      "long",     "nullptr",  "register", "restrict",
    "return",   "short",    "signed",   "sizeof",   "static",   "struct",
    "switch",   "true",     "typedef",  "union",    "unsigned", "void",
    "volatile", "while",    "_Bool",    "__restrict__",
};

constexpr std::array<std::string_view, 22> kTypeKeywords = {
    "auto",   "bool",     "char",     "const",    "double",   "extern",
    "float",  "inline",   "int",      "long",     "register", "restrict",
    "short",  "signed",   "static",   "struct",   "union",    "unsigned",
    "void",   "volatile", "_Bool",    "__restrict__",
};

// Longest first.
constexpr std::array<std::string_view, 26> kPunctuators = {
    "<<<", ">>>", "<<=", ">>=", "...", "->", "++", "--", "<<",
    ">>",  "<=",  ">=",  "==",  "!=",  "&&", "||", "+=", "-=",
    "*=",  "/=",  "%=",  "&=",  "^=",  "|=", "::", "##",
};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool IsHSpace(char c) { return c == ' ' || c == '\t' || c == '\f' || c == '\v'; }

class Lexer {
 public:
  Lexer(std::string_view src, LexOptions options)
      : src_(src), options_(options) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) out.push_back(Next());
    return out;
  }

 private:
  Token Make(TokenKind kind, size_t begin) {
    return Token{kind, src_.substr(begin, pos_ - begin), {begin, pos_}};
  }

  char At(size_t i) const { return i < src_.size() ? src_[i] : '\0'; }

  // True when only horizontal whitespace separates `pos_` from the start of
  // the line.
  bool AtLineStart() const {
    size_t i = pos_;
    while (i > 0) {
      char c = src_[i - 1];
      if (c == '\n') return true;
      if (!IsHSpace(c)) return false;
      --i;
    }
    return true;
  }

  Token Next() {
    size_t begin = pos_;
    char c = src_[pos_];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
        c == '\v' || (c == '\\' && (At(pos_ + 1) == '\n' ||
                                    (At(pos_ + 1) == '\r' && At(pos_ + 2) == '\n')))) {
      while (pos_ < src_.size()) {
        char d = src_[pos_];
        if (d == ' ' || d == '\t' || d == '\n' || d == '\r' || d == '\f' ||
            d == '\v') {
          ++pos_;
        } else if (d == '\\' && At(pos_ + 1) == '\n') {
          pos_ += 2;
        } else if (d == '\\' && At(pos_ + 1) == '\r' && At(pos_ + 2) == '\n') {
          pos_ += 3;
        } else {
          break;
        }
      }
      return Make(TokenKind::kWhitespace, begin);
    }
    if (c == '/' && At(pos_ + 1) == '/') {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      return Make(TokenKind::kComment, begin);
    }
    if (c == '/' && At(pos_ + 1) == '*') {
      size_t close = src_.find("*/", pos_ + 2);
      pos_ = close == std::string_view::npos ? src_.size() : close + 2;
      return Make(TokenKind::kComment, begin);
    }
    if (c == '#' && AtLineStart()) return Directive(begin);
    if (IsIdentStart(c)) {
      while (pos_ < src_.size() && IsIdentChar(src_[pos_])) ++pos_;
      std::string_view word = src_.substr(begin, pos_ - begin);
      // Encoding prefixes on string literals: L"..", u8"..".
      if ((word == "L" || word == "u" || word == "U" || word == "u8") &&
          (At(pos_) == '"' || At(pos_) == '\'')) {
        return Quoted(begin, At(pos_));
      }
      return Make(IsKeyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier,
                  begin);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(At(pos_ + 1))))) {
      ++pos_;
      while (pos_ < src_.size()) {
        char d = src_[pos_];
        if ((d == '+' || d == '-') &&
            (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E' ||
             src_[pos_ - 1] == 'p' || src_[pos_ - 1] == 'P')) {
          ++pos_;
        } else if (IsIdentChar(d) || d == '.' || d == '\'') {
          ++pos_;
        } else {
          break;
        }
      }
      return Make(TokenKind::kLiteral, begin);
    }
    if (c == '"' || c == '\'') return Quoted(begin, c);
    if (options_.pattern_delimiters && c == '\\') {
      char d = At(pos_ + 1);
      if (d == '(' || d == ')' || d == '|' || d == '&') {
        pos_ += 2;
        return Make(TokenKind::kPunctuator, begin);
      }
    }
    for (std::string_view p : kPunctuators) {
      if (src_.substr(pos_, p.size()) == p) {
        pos_ += p.size();
        return Make(TokenKind::kPunctuator, begin);
      }
    }
    ++pos_;
    return Make(TokenKind::kPunctuator, begin);
  }

  Token Quoted(size_t begin, char quote) {
    ++pos_;
    while (pos_ < src_.size() && src_[pos_] != quote && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
      ++pos_;
    }
    if (pos_ < src_.size() && src_[pos_] == quote) ++pos_;
    return Make(TokenKind::kLiteral, begin);
  }

  // A preprocessor line runs to the first newline not escaped by a
  // backslash. The terminating newline is left for the whitespace token.
  Token Directive(size_t begin) {
    while (pos_ < src_.size()) {
      char d = src_[pos_];
      if (d == '\n') break;
      if (d == '\\' && At(pos_ + 1) == '\n') {
        pos_ += 2;
        continue;
      }
      if (d == '\\' && At(pos_ + 1) == '\r' && At(pos_ + 2) == '\n') {
        pos_ += 3;
        continue;
      }
      ++pos_;
    }
    // Trailing carriage return / spaces stay in the line; harmless.
    std::string_view line = src_.substr(begin, pos_ - begin);
    size_t i = 1;
    while (i < line.size() && IsHSpace(line[i])) ++i;
    std::string_view rest = line.substr(i);
    auto starts_word = [&](std::string_view w) {
      return rest.substr(0, w.size()) == w &&
             (rest.size() == w.size() || !IsIdentChar(rest[w.size()]));
    };
    if (starts_word("pragma")) return Make(TokenKind::kPragmaLine, begin);
    if (starts_word("include")) return Make(TokenKind::kIncludeLine, begin);
    return Make(TokenKind::kDirectiveLine, begin);
  }

  std::string_view src_;
  LexOptions options_;
  size_t pos_ = 0;
};

}  // namespace

const char* TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kLiteral: return "literal";
    case TokenKind::kPunctuator: return "punctuator";
    case TokenKind::kPragmaLine: return "pragma-line";
    case TokenKind::kIncludeLine: return "include-line";
    case TokenKind::kDirectiveLine: return "directive-line";
    case TokenKind::kComment: return "comment";
    case TokenKind::kWhitespace: return "whitespace";
  }
  return "?";
}

std::vector<Token> Lex(std::string_view source, LexOptions options) {
  return Lexer(source, options).Run();
}

bool IsKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool IsTypeKeyword(std::string_view word) {
  return std::find(kTypeKeywords.begin(), kTypeKeywords.end(), word) !=
         kTypeKeywords.end();
}

bool IsIdentifierText(std::string_view text) {
  if (text.empty() || !IsIdentStart(text[0])) return false;
  return std::all_of(text.begin(), text.end(), IsIdentChar) && !IsKeyword(text);
}

std::string NormalizeDirective(std::string_view line) {
  std::string out;
  bool pending_space = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '\\' && i + 1 < line.size() &&
        (line[i + 1] == '\n' || line[i + 1] == '\r')) {
      pending_space = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
        c == '\v') {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

std::string PragmaTail(std::string_view pragma_line) {
  std::string norm = NormalizeDirective(pragma_line);
  // "#pragma x" or "# pragma x"
  size_t at = norm.find("pragma");
  if (at == std::string::npos) return {};
  size_t start = at + 6;
  while (start < norm.size() && norm[start] == ' ') ++start;
  return norm.substr(start);
}

}  // namespace spl
