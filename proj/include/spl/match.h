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

#ifndef SPL_MATCH_H_
#define SPL_MATCH_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spl/lexer.h"
#include "spl/smpl.h"
#include "spl/syntax_tree.h"

namespace spl {

// What a metavariable is bound to.
struct BoundValue {
  MetaKind kind = MetaKind::kIdentifier;
  // Program bytes, or synthesized text for script outputs and fresh names.
  std::string text;
  // Structural identity: significant token texts joined by single spaces.
  std::string key;
  // Where the value lives in the current working source, if anywhere.
  bool has_span = false;
  ByteSpan span;
  // kPosition only.
  SourcePosition position;

  friend bool operator==(const BoundValue& a, const BoundValue& b) {
    return a.kind == b.kind && a.key == b.key && a.text == b.text &&
           a.has_span == b.has_span &&
           (!a.has_span || (a.span.begin == b.span.begin &&
                            a.span.end == b.span.end));
  }
};

// Bindings visible inside one rule, by local metavariable name.
using Bindings = std::map<std::string, BoundValue>;

// Global environment entries keyed by (rule name, metavariable name).
using EnvKey = std::pair<std::string, std::string>;
using BindingEnv = std::map<EnvKey, BoundValue>;

// Program spans for a run of pattern tokens, from a containment branch
// occurrence other than the one that produced the bindings.
struct ExtraOccurrence {
  size_t first_token = 0;
  size_t last_token = 0;  // exclusive
  std::vector<ByteSpan> spans;  // indexed by pattern token - first_token
};

inline constexpr size_t kUnmapped = static_cast<size_t>(-1);

struct MatchResult {
  std::string rule;
  ByteSpan site;
  Bindings bindings;
  // Per significant pattern token: the program bytes it matched, or
  // {kUnmapped, kUnmapped}.
  std::vector<ByteSpan> token_map;
  std::vector<ExtraOccurrence> extra;
  // Disjunction node -> chosen branch index.
  std::map<NodeId, int> choices;
};

struct MatchOptions {
  // Pure-context rules report every site, nested ones included; rules with
  // edits take leftmost-outermost, non-overlapping sites.
  bool all_sites = false;
};

// Finds the sites where `rule`'s pattern matches `tree`, honoring bindings
// already fixed by inherited metavariables.
std::vector<MatchResult> MatchPattern(const Rule& rule, const SyntaxTree& tree,
                                      const Bindings& inherited,
                                      const MatchOptions& options = {});

// True when the pattern has minus tokens or plus lines.
bool HasEdits(const Rule& rule);

// Canonical key for a token sequence.
std::string KeyOf(const std::vector<std::string_view>& texts);

}  // namespace spl

#endif  // SPL_MATCH_H_
