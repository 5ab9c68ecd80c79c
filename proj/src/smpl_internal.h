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

#ifndef SPL_SRC_SMPL_INTERNAL_H_
#define SPL_SRC_SMPL_INTERNAL_H_

#include <string>
#include <string_view>
#include <vector>

#include "spl/smpl.h"

namespace spl {
namespace smpl_internal {

std::string Trim(std::string_view s);
std::vector<std::string> SplitLines(std::string_view text);
std::vector<std::string> SplitTopLevel(std::string_view text, char sep);
std::string ReadQuoted(std::string_view text, size_t& pos, int line);
std::string QuoteRaw(std::string_view s);

// One `kind a, b = ..., R.c` declaration without the trailing ';'.
std::vector<MetavarDecl> ParseDeclaration(std::string_view text, int line);

// Script bodies. `first_line` is the file line of the first body line.
void ParseInitializerBody(std::string_view body, int first_line,
                          ScriptBody& out);
void ParseScriptAssignments(std::string_view body, int first_line,
                            ScriptBody& out);

std::string QuoteScript(std::string_view s);

}  // namespace smpl_internal
}  // namespace spl

#endif  // SPL_SRC_SMPL_INTERNAL_H_
