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

#ifndef SPL_ENGINE_H_
#define SPL_ENGINE_H_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spl/match.h"
#include "spl/smpl.h"
#include "spl/transform.h"

namespace spl {

enum class Dialect { kC, kCExt };

const char* DialectName(Dialect d);
std::optional<Dialect> ParseDialect(const std::string& text);

// The explicit choice if given, else c-ext when the patch carries a
// `# spatch --c++` hint, else c.
Dialect EffectiveDialect(const RuleSet& rules, std::optional<Dialect> explicit_choice);

// A script produced text its constructor does not allow.
class ScriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  Dialect dialect = Dialect::kC;
  std::string path;
};

// One executed pattern rule.
struct Stage {
  std::string rule;
  std::string source_before;
  std::vector<MatchResult> matches;  // the kept ones, against source_before
  EditScript script;
};

struct RunResult {
  std::string output;
  std::map<std::string, size_t> match_counts;
  std::map<std::string, bool> matched;
  std::vector<std::string> skipped;
  std::vector<Stage> stages;
  std::vector<std::string> warnings;
};

// Throws SyntaxError when `source` (or the rewritten source after some
// rule) does not parse in `options.dialect`, SubstitutionError or
// ScriptError on bad plus code.
RunResult RunRules(const RuleSet& rules, const std::string& source,
                   const RunOptions& options = {});

// Builds a fresh identifier from its template and the bindings, made unique
// against `taken` by appending _1, _2, ... The result is added to `taken`.
std::string GenerateFresh(const MetavarDecl& decl, const Bindings& bindings,
                          std::set<std::string>& taken);

}  // namespace spl

#endif  // SPL_ENGINE_H_
