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

#ifndef SPL_PARSER_H_
#define SPL_PARSER_H_

#include <functional>
#include <string>
#include <string_view>

#include "spl/syntax_tree.h"

namespace spl {

// How a pattern identifier must be treated by the grammar. Program parsing
// never sees anything but kNone.
enum class PatternRole {
  kNone,
  kType,
  kStatement,
  kStatementList,
  kParameterList,
  kExpressionList,
};

struct ParseOptions {
  std::string path;
  // Pattern mode: enables dots, \( \| \& \) groups, `term@p` attachments,
  // and metavariable-aware parsing through `role`.
  bool pattern = false;
  std::function<PatternRole(std::string_view)> role;
};

enum class FragmentKind { kTranslationUnit, kStatement, kExpression };

// Parses a whole translation unit. Throws SyntaxError on input outside the
// supported subset.
SyntaxTree Parse(std::string source, const ParseOptions& options = {});

// Parses `source` as a single statement or expression. The root is the
// parsed node; trailing tokens are an error.
SyntaxTree ParseFragment(std::string source, FragmentKind kind,
                         const ParseOptions& options = {});

// Parses a semantic-patch body (minus and context lines). The root is either
// kExprPattern wrapping one expression or kTranslationUnit holding items.
SyntaxTree ParsePattern(std::string source, const ParseOptions& options);

}  // namespace spl

#endif  // SPL_PARSER_H_
