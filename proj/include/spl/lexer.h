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

#ifndef SPL_LEXER_H_
#define SPL_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace spl {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kLiteral,
  kPunctuator,
  kPragmaLine,
  kIncludeLine,
  // Any other preprocessor line (#define, #if, ...). Opaque to the engine.
  kDirectiveLine,
  kComment,
  kWhitespace,
};

const char* TokenKindName(TokenKind kind);

// Half-open byte range [begin, end) into a source buffer.
struct ByteSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

struct Token {
  TokenKind kind;
  std::string_view text;
  ByteSpan span;

  bool IsTrivia() const {
    return kind == TokenKind::kWhitespace || kind == TokenKind::kComment;
  }
  bool Is(std::string_view s) const { return !IsTrivia() && text == s; }
};

struct LexOptions {
  // Recognize the semantic-patch group delimiters \( \| \& \) as single
  // punctuators.
  bool pattern_delimiters = false;
};

// Splits `source` into tokens. Concatenating the token texts in order
// reproduces `source` exactly. Never fails; unknown bytes become one-byte
// punctuators. The returned views alias `source`.
std::vector<Token> Lex(std::string_view source, LexOptions options = {});

bool IsKeyword(std::string_view word);

// Keywords that can start or continue a declaration-specifier sequence.
bool IsTypeKeyword(std::string_view word);

bool IsIdentifierText(std::string_view text);

// Text of a #pragma line after the `pragma` word, with backslash-newline
// continuations removed and whitespace runs collapsed to one space.
std::string PragmaTail(std::string_view pragma_line);

// Whitespace-normalized form of any preprocessor line.
std::string NormalizeDirective(std::string_view line);

}  // namespace spl

#endif  // SPL_LEXER_H_
