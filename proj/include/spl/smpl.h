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

#ifndef SPL_SMPL_H_
#define SPL_SMPL_H_

#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spl/parser.h"
#include "spl/syntax_tree.h"

namespace spl {

enum class MetaKind {
  kType,
  kIdentifier,
  kFunction,  // identifier restricted to function-name positions
  kParameterList,
  kStatement,
  kStatementList,
  kExpression,
  kExpressionList,
  kConstant,
  kPosition,
  kSymbol,
  kPragmaInfo,
  kFreshIdentifier,
};

const char* MetaKindName(MetaKind kind);

enum class ConstraintKind { kNone, kRegex, kSet };

// One part of a fresh-identifier template: a string literal or a reference
// to another metavariable.
struct FreshPart {
  bool literal = true;
  std::string text;
  friend bool operator==(const FreshPart&, const FreshPart&) = default;
};

struct MetavarDecl {
  std::string name;
  // Set for inherited declarations such as `type c.T;`.
  std::string inherited_from;
  MetaKind kind = MetaKind::kIdentifier;
  ConstraintKind constraint = ConstraintKind::kNone;
  std::string regex_source;
  std::shared_ptr<const std::regex> regex;
  std::vector<std::string> set_values;
  std::vector<FreshPart> fresh_template;
  int line = 0;

  bool inherited() const { return !inherited_from.empty(); }
};

enum class LineTag { kContext, kMinus, kPlus };

// Consecutive plus lines. They attach before pattern token `before_token`
// (== sig_count() when at the very end of the pattern).
struct PlusChunk {
  size_t before_token = 0;
  std::vector<std::string> lines;  // text after the '+' column
  int line = 0;
};

struct Dependency {
  enum class Kind { kNone, kMatched, kNotMatched };
  Kind kind = Kind::kNone;
  std::string rule;
};

struct PatternBody {
  SyntaxTree tree;              // minus and context code
  std::vector<LineTag> tags;    // per significant pattern token
  std::vector<PlusChunk> plus;
  std::vector<std::string> raw_lines;  // body as written
};

// A script assignment `out = ctor(arg)` or `out = a + b + ...`.
struct ScriptTerm {
  enum class Kind { kLiteral, kMetavar, kTableLookup };
  Kind kind = Kind::kLiteral;
  std::string text;   // literal value or metavariable name
  std::string table;  // kTableLookup only
  friend bool operator==(const ScriptTerm&, const ScriptTerm&) = default;
};

enum class ScriptCtor { kMakeIdent, kMakeType, kMakePragmaInfo, kConcat };

struct ScriptAssignment {
  std::string target;
  ScriptCtor ctor = ScriptCtor::kConcat;
  std::vector<ScriptTerm> terms;
  friend bool operator==(const ScriptAssignment&,
                         const ScriptAssignment&) = default;
};

struct ScriptInput {
  std::string local;
  std::string rule;
  std::string var;
  friend bool operator==(const ScriptInput&, const ScriptInput&) = default;
};

struct ScriptBody {
  std::vector<ScriptInput> inputs;
  std::vector<std::string> outputs;
  std::map<std::string, std::map<std::string, std::string>> tables;
  std::vector<ScriptAssignment> assignments;
};

struct Rule {
  enum class Kind { kPattern, kScript, kInitializer };
  Kind kind = Kind::kPattern;
  std::string name;
  bool anonymous = false;
  Dependency dependency;
  int line = 0;
  std::vector<MetavarDecl> metavars;  // pattern rules
  PatternBody body;                   // pattern rules
  ScriptBody script;                  // script and initializer rules

  const MetavarDecl* FindMetavar(std::string_view local) const;
};

struct RuleSet {
  std::vector<Rule> rules;
  // From a leading `# spatch --c++=NN` comment, e.g. "c++=23" or "c++".
  std::string dialect_hint;

  const Rule* Find(std::string_view name) const;
  int IndexOf(std::string_view name) const;
};

class SmplError : public std::runtime_error {
 public:
  SmplError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A script block using anything outside the supported declarative subset.
class ScriptSubsetError : public SmplError {
 public:
  using SmplError::SmplError;
};

RuleSet ParseSmpl(std::string_view text);

struct SmplDiagnostic {
  int line = 0;
  std::string rule;
  std::string message;
};

std::vector<SmplDiagnostic> Validate(const RuleSet& rules);

// Renders a rule set back to semantic-patch text; ParseSmpl of the result
// is structurally equal to the input.
std::string PrintSmpl(const RuleSet& rules);

bool StructurallyEqual(const RuleSet& a, const RuleSet& b);

// The grammar role a metavariable kind plays inside pattern code.
PatternRole RoleOf(MetaKind kind);

}  // namespace spl

#endif  // SPL_SMPL_H_
