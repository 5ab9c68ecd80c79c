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

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "smpl_internal.h"
#include "spl/smpl.h"

namespace spl {
namespace smpl_internal {
namespace {

struct PyToken {
  enum class Kind { kName, kString, kPunct, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  int line = 0;
};

std::vector<PyToken> TokenizeScript(std::string_view body, int first_line) {
  std::vector<PyToken> out;
  int line = first_line;
  size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw ScriptSubsetError("script-subset-violation: " + what, line);
  };
  while (i < body.size()) {
    char c = body[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == '\\') {
      ++i;
    } else if (c == '#' || body.substr(i, 2) == "//") {
      while (i < body.size() && body[i] != '\n') ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t b = i;
      while (i < body.size() &&
             (std::isalnum(static_cast<unsigned char>(body[i])) ||
              body[i] == '_'))
        ++i;
      out.push_back({PyToken::Kind::kName, std::string(body.substr(b, i - b)),
                     line});
    } else if (c == '"' || c == '\'') {
      if (body.substr(i, 3) == std::string(3, c)) fail("triple-quoted string");
      std::string text;
      for (++i;; ++i) {
        if (i >= body.size() || body[i] == '\n') fail("unterminated string");
        if (body[i] == '\\' && i + 1 < body.size()) {
          text += body[++i];
          continue;
        }
        if (body[i] == c) break;
        text += body[i];
      }
      ++i;
      out.push_back({PyToken::Kind::kString, text, line});
    } else if (std::string_view("=.{}:,[]()+;").find(c) !=
               std::string_view::npos) {
      out.push_back({PyToken::Kind::kPunct, std::string(1, c), line});
      ++i;
    } else {
      fail(std::string("unsupported character '") + c + "'");
    }
  }
  out.push_back({PyToken::Kind::kEnd, "", line});
  return out;
}

class ScriptParser {
 public:
  explicit ScriptParser(std::vector<PyToken> tokens)
      : tokens_(std::move(tokens)) {}

  void Initializer(ScriptBody& out) {
    while (!AtEnd()) {
      std::string table = Name("table name");
      Punct("=");
      Punct("{");
      auto& entries = out.tables[table];
      while (!IsPunct("}")) {
        std::string key = String("dictionary key");
        Punct(":");
        entries[key] = String("dictionary value");
        if (!IsPunct(",")) break;
        ++p_;
      }
      Punct("}");
      if (IsPunct(";")) ++p_;
    }
  }

  void Assignments(ScriptBody& out) {
    while (!AtEnd()) {
      if (Name("'coccinelle'") != "coccinelle") Fail("expected 'coccinelle.'");
      Punct(".");
      ScriptAssignment a;
      a.target = Name("output name");
      Punct("=");
      Expression(a);
      out.assignments.push_back(std::move(a));
      if (IsPunct(";")) ++p_;
    }
  }

 private:
  void Expression(ScriptAssignment& a) {
    const PyToken& t = tokens_[p_];
    if (t.kind == PyToken::Kind::kName &&
        (t.text == "cocci" || t.text.rfind("make_", 0) == 0)) {
      if (t.text == "cocci") {
        ++p_;
        Punct(".");
      }
      std::string ctor = Name("constructor");
      if (ctor == "make_ident") {
        a.ctor = ScriptCtor::kMakeIdent;
      } else if (ctor == "make_type") {
        a.ctor = ScriptCtor::kMakeType;
      } else if (ctor == "make_pragmainfo") {
        a.ctor = ScriptCtor::kMakePragmaInfo;
      } else {
        Fail("unsupported constructor '" + ctor + "'");
      }
      Punct("(");
      ScriptTerm term;
      if (tokens_[p_].kind == PyToken::Kind::kString) {
        term.text = tokens_[p_++].text;
      } else {
        std::string name = Name("argument");
        if (IsPunct("[")) {
          ++p_;
          term.kind = ScriptTerm::Kind::kTableLookup;
          term.table = name;
          term.text = Name("lookup key");
          Punct("]");
        } else {
          term.kind = ScriptTerm::Kind::kMetavar;
          term.text = name;
        }
      }
      Punct(")");
      a.terms.push_back(term);
      return;
    }
    a.ctor = ScriptCtor::kConcat;
    while (true) {
      const PyToken& u = tokens_[p_];
      ScriptTerm term;
      if (u.kind == PyToken::Kind::kString) {
        term.text = u.text;
      } else if (u.kind == PyToken::Kind::kName && u.text != "coccinelle") {
        term.kind = ScriptTerm::Kind::kMetavar;
        term.text = u.text;
      } else {
        Fail("expected string literal or metavariable");
      }
      ++p_;
      a.terms.push_back(term);
      if (!IsPunct("+")) break;
      ++p_;
    }
  }

  bool AtEnd() const { return tokens_[p_].kind == PyToken::Kind::kEnd; }
  bool IsPunct(std::string_view s) const {
    return tokens_[p_].kind == PyToken::Kind::kPunct && tokens_[p_].text == s;
  }
  [[noreturn]] void Fail(const std::string& what) const {
    throw ScriptSubsetError("script-subset-violation: " + what,
                            tokens_[p_].line);
  }
  void Punct(std::string_view s) {
    if (!IsPunct(s)) Fail("expected '" + std::string(s) + "'");
    ++p_;
  }
  std::string Name(const std::string& what) {
    if (tokens_[p_].kind != PyToken::Kind::kName) Fail("expected " + what);
    return tokens_[p_++].text;
  }
  std::string String(const std::string& what) {
    if (tokens_[p_].kind != PyToken::Kind::kString) Fail("expected " + what);
    return tokens_[p_++].text;
  }

  std::vector<PyToken> tokens_;
  size_t p_ = 0;
};

}  // namespace

void ParseInitializerBody(std::string_view body, int first_line,
                          ScriptBody& out) {
  ScriptParser(TokenizeScript(body, first_line)).Initializer(out);
}

void ParseScriptAssignments(std::string_view body, int first_line,
                            ScriptBody& out) {
  ScriptParser(TokenizeScript(body, first_line)).Assignments(out);
}

std::string QuoteScript(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace smpl_internal
}  // namespace spl
