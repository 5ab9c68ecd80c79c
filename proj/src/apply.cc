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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spl/transform.h"

namespace spl {

std::string Apply(const EditScript& script, std::string_view source) {
  std::string out;
  out.reserve(source.size());
  size_t at = 0;
  for (const Edit& e : script.edits) {
    out.append(source.substr(at, e.span.begin - at));
    out += e.replacement;
    at = e.span.end;
  }
  out.append(source.substr(at));
  return out;
}

std::optional<ByteSpan> RemapSpan(const EditScript& script, ByteSpan span) {
  long long shift = 0;
  for (const Edit& e : script.edits) {
    long long grow = static_cast<long long>(e.replacement.size()) -
                     static_cast<long long>(e.span.size());
    if (e.span.begin == e.span.end) {
      if (e.span.begin <= span.begin) {
        shift += grow;
      } else if (e.span.begin < span.end) {
        return std::nullopt;
      }
      continue;
    }
    if (e.span.end <= span.begin) {
      shift += grow;
    } else if (e.span.begin < span.end) {
      return std::nullopt;
    }
  }
  return ByteSpan{static_cast<size_t>(static_cast<long long>(span.begin) + shift),
                  static_cast<size_t>(static_cast<long long>(span.end) + shift)};
}

}  // namespace spl
