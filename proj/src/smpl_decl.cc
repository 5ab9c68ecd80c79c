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

#include <algorithm>
#include <cctype>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spl/lexer.h"
#include "spl/smpl.h"
#include "smpl_internal.h"

namespace spl {
namespace smpl_internal {

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    std::string line(text.substr(start, nl - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = nl + 1;
  }
  return lines;
}

// Splits at `sep` outside braces and quotes.
std::vector<std::string> SplitTopLevel(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  char quote = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quote) {
      cur += c;
      if (c == '\\' && i + 1 < text.size()) {
        cur += text[++i];
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') quote = c;
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  parts.push_back(cur);
  return parts;
}

// Reads a double-quoted literal at `pos`. Only \" is unescaped; other
// backslashes are kept so regular expressions survive untouched.
std::string ReadQuoted(std::string_view text, size_t& pos, int line) {
  if (pos >= text.size() || text[pos] != '"') {
    throw SmplError("expected string literal", line);
  }
  std::string out;
  for (++pos; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '\\' && pos + 1 < text.size() && text[pos + 1] == '"') {
      out += '"';
      ++pos;
    } else if (c == '"') {
      ++pos;
      return out;
    } else {
      out += c;
    }
  }
  throw SmplError("unterminated string literal", line);
}

std::string QuoteRaw(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

namespace {

struct KindWord {
  const char* pattern;
  MetaKind kind;
};

const KindWord kKindWords[] = {
    {"fresh identifier", MetaKind::kFreshIdentifier},
    {"parameter list", MetaKind::kParameterList},
    {"statement list", MetaKind::kStatementList},
    {"expression list", MetaKind::kExpressionList},
    {"identifier", MetaKind::kIdentifier},
    {"function", MetaKind::kFunction},
    {"type", MetaKind::kType},
    {"statement", MetaKind::kStatement},
    {"expression", MetaKind::kExpression},
    {"constant", MetaKind::kConstant},
    {"position", MetaKind::kPosition},
    {"symbol", MetaKind::kSymbol},
    {"pragmainfo", MetaKind::kPragmaInfo},
};

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Matches a kind keyword, allowing any whitespace between its words.
bool MatchKindWord(std::string_view text, const char* word, size_t& end) {
  size_t i = 0;
  for (const char* w = word; *w; ++w) {
    if (*w == ' ') {
      if (i >= text.size() || !std::isspace(static_cast<unsigned char>(text[i])))
        return false;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      continue;
    }
    if (i >= text.size() || text[i] != *w) return false;
    ++i;
  }
  if (i < text.size() && IsWordChar(text[i])) return false;
  end = i;
  return true;
}

void SkipSpace(std::string_view s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
    ++pos;
}

std::string ReadWord(std::string_view s, size_t& pos) {
  size_t b = pos;
  while (pos < s.size() && IsWordChar(s[pos])) ++pos;
  return std::string(s.substr(b, pos - b));
}

MetavarDecl ParseEntry(std::string_view entry, MetaKind kind, int line) {
  MetavarDecl decl;
  decl.kind = kind;
  decl.line = line;
  size_t pos = 0;
  SkipSpace(entry, pos);
  std::string first = ReadWord(entry, pos);
  if (first.empty()) throw SmplError("expected metavariable name", line);
  if (pos < entry.size() && entry[pos] == '.') {
    ++pos;
    decl.inherited_from = first;
    decl.name = ReadWord(entry, pos);
    if (decl.name.empty()) {
      throw SmplError("expected metavariable name after '.'", line);
    }
  } else {
    decl.name = first;
  }
  SkipSpace(entry, pos);
  if (pos == entry.size()) {
    if (kind == MetaKind::kFreshIdentifier) {
      throw SmplError("fresh identifier '" + decl.name + "' needs a template",
                      line);
    }
    return decl;
  }
  if (entry.substr(pos, 2) == "=~") {
    pos += 2;
    SkipSpace(entry, pos);
    decl.constraint = ConstraintKind::kRegex;
    decl.regex_source = ReadQuoted(entry, pos, line);
    try {
      decl.regex = std::make_shared<const std::regex>(decl.regex_source);
    } catch (const std::regex_error& e) {
      throw SmplError("bad regular expression for '" + decl.name +
                          "': " + e.what(),
                      line);
    }
  } else if (entry[pos] == '=') {
    ++pos;
    SkipSpace(entry, pos);
    if (kind == MetaKind::kFreshIdentifier) {
      std::string rest(entry.substr(pos));
      size_t at = 0;
      while (true) {
        SkipSpace(rest, at);
        FreshPart part;
        if (at < rest.size() && rest[at] == '"') {
          part.text = ReadQuoted(rest, at, line);
        } else {
          part.literal = false;
          part.text = ReadWord(rest, at);
          if (part.text.empty()) {
            throw SmplError("bad fresh identifier template", line);
          }
        }
        decl.fresh_template.push_back(part);
        SkipSpace(rest, at);
        if (at == rest.size()) break;
        if (rest.compare(at, 2, "##") != 0) {
          throw SmplError("expected '##' in fresh identifier template", line);
        }
        at += 2;
      }
      pos = entry.size();
    } else if (pos < entry.size() && entry[pos] == '{') {
      size_t close = entry.find('}', pos);
      if (close == std::string_view::npos) {
        throw SmplError("unterminated '{' in constraint", line);
      }
      for (const std::string& v :
           SplitTopLevel(entry.substr(pos + 1, close - pos - 1), ',')) {
        std::string t = Trim(v);
        if (t.empty()) throw SmplError("empty value in set constraint", line);
        decl.set_values.push_back(t);
      }
      decl.constraint = ConstraintKind::kSet;
      pos = close + 1;
    } else {
      throw SmplError("unsupported constraint on '" + decl.name + "'", line);
    }
  } else {
    throw SmplError("unexpected text after '" + decl.name + "'", line);
  }
  SkipSpace(entry, pos);
  if (pos != entry.size()) {
    throw SmplError("unexpected text after '" + decl.name + "'", line);
  }
  if (kind == MetaKind::kFreshIdentifier && decl.fresh_template.empty()) {
    throw SmplError("fresh identifier needs a template", line);
  }
  return decl;
}

}  // namespace

std::vector<MetavarDecl> ParseDeclaration(std::string_view text, int line) {
  std::string t = Trim(text);
  for (const KindWord& kw : kKindWords) {
    size_t end = 0;
    if (!MatchKindWord(t, kw.pattern, end)) continue;
    std::vector<MetavarDecl> out;
    for (const std::string& entry :
         SplitTopLevel(std::string_view(t).substr(end), ',')) {
      out.push_back(ParseEntry(entry, kw.kind, line));
    }
    return out;
  }
  throw SmplError("unknown metavariable kind in '" + t + "'", line);
}

}  // namespace smpl_internal
}  // namespace spl
