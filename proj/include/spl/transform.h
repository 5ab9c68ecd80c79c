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

#ifndef SPL_TRANSFORM_H_
#define SPL_TRANSFORM_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spl/lexer.h"
#include "spl/match.h"
#include "spl/smpl.h"
#include "spl/syntax_tree.h"

namespace spl {

// Replace `span` with `replacement`; a pure insertion has an empty span.
struct Edit {
  ByteSpan span;
  std::string replacement;
  std::string rule;
  size_t seq = 0;
};

// Sorted by (begin, end, seq); spans never overlap, though several
// insertions may share an offset.
struct EditScript {
  std::vector<Edit> edits;
  bool empty() const { return edits.empty(); }
};

class SubstitutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlanResult {
  EditScript script;
  std::vector<std::string> warnings;
  // Matches whose edits survived conflict resolution, by input index.
  std::vector<size_t> kept;
};

// Turns the matches of one pattern rule against `tree` into edits. Throws
// SubstitutionError if a plus line names a metavariable with no binding.
PlanResult PlanEdits(const Rule& rule, const std::vector<MatchResult>& matches,
                     const SyntaxTree& tree);

std::string Apply(const EditScript& script, std::string_view source);

// Where `span` of the old source lives after `script`; nullopt when an edit
// touches its inside.
std::optional<ByteSpan> RemapSpan(const EditScript& script, ByteSpan span);

// Unified diff with 3 lines of context. Empty when the inputs are equal.
std::string EmitDiff(std::string_view old_text, std::string_view new_text,
                     const std::string& path);

// Applies a single-file unified diff produced by EmitDiff. nullopt when a
// hunk does not fit `old_text`.
std::optional<std::string> ApplyUnifiedDiff(std::string_view old_text,
                                            std::string_view diff);

}  // namespace spl

#endif  // SPL_TRANSFORM_H_
