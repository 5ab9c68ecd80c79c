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
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "spl/transform.h"

namespace spl {
namespace {

// Lines with their terminators; the last one may lack '\n'.
std::vector<std::string_view> SplitKeepingNewlines(std::string_view text) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    size_t end = nl == std::string_view::npos ? text.size() : nl + 1;
    out.push_back(text.substr(start, end - start));
    start = end;
  }
  return out;
}

enum class Op { kEqual, kDelete, kInsert };

// Myers' greedy O((N+M)D) shortest edit script over lines.
std::vector<Op> MyersDiff(const std::vector<std::string_view>& a,
                          const std::vector<std::string_view>& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  const int max = n + m;
  const int offset = max + 1;
  std::vector<int> v(2 * max + 3, 0);
  std::vector<std::vector<int>> trace;
  int found_d = -1;
  for (int d = 0; d <= max; ++d) {
    trace.push_back(v);
    for (int k = -d; k <= d; k += 2) {
      int x;
      if (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1])) {
        x = v[offset + k + 1];
      } else {
        x = v[offset + k - 1] + 1;
      }
      int y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[offset + k] = x;
      if (x >= n && y >= m) {
        found_d = d;
        break;
      }
    }
    if (found_d >= 0) break;
  }
  std::vector<Op> ops;
  int x = n, y = m;
  for (int d = found_d; d > 0; --d) {
    const std::vector<int>& pv = trace[d];
    int k = x - y;
    int prev_k;
    if (k == -d || (k != d && pv[offset + k - 1] < pv[offset + k + 1])) {
      prev_k = k + 1;
    } else {
      prev_k = k - 1;
    }
    int prev_x = pv[offset + prev_k];
    int prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      ops.push_back(Op::kEqual);
      --x;
      --y;
    }
    if (x == prev_x) {
      ops.push_back(Op::kInsert);
      --y;
    } else {
      ops.push_back(Op::kDelete);
      --x;
    }
  }
  while (x > 0 && y > 0) {
    ops.push_back(Op::kEqual);
    --x;
    --y;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

std::string Range(size_t start, size_t count) {
  // GNU style: an empty range names the line before it.
  if (count == 0) return std::to_string(start == 0 ? 0 : start - 1) + ",0";
  if (count == 1) return std::to_string(start);
  return std::to_string(start) + "," + std::to_string(count);
}

void EmitLine(std::string& out, char tag, std::string_view line) {
  out += tag;
  out.append(line);
  if (line.empty() || line.back() != '\n') {
    out += "\n\\ No newline at end of file\n";
  }
}

}  // namespace

std::string EmitDiff(std::string_view old_text, std::string_view new_text,
                     const std::string& path) {
  if (old_text == new_text) return "";
  std::vector<std::string_view> a = SplitKeepingNewlines(old_text);
  std::vector<std::string_view> b = SplitKeepingNewlines(new_text);
  std::vector<Op> ops = MyersDiff(a, b);
  constexpr size_t kContext = 3;

  // Positions (old index, new index) before each op.
  std::vector<size_t> ai(ops.size() + 1), bi(ops.size() + 1);
  for (size_t i = 0; i < ops.size(); ++i) {
    ai[i + 1] = ai[i] + (ops[i] != Op::kInsert);
    bi[i + 1] = bi[i] + (ops[i] != Op::kDelete);
  }
  std::string out = "--- " + path + "\n+++ " + path + "\n";
  size_t i = 0;
  while (i < ops.size()) {
    if (ops[i] == Op::kEqual) {
      ++i;
      continue;
    }
    size_t start = i >= kContext ? i - kContext : 0;
    while (start < i && ops[start] != Op::kEqual) ++start;
    size_t end = i;
    // Extend while the next change is within 2*context equal lines.
    while (true) {
      while (end < ops.size() && ops[end] != Op::kEqual) ++end;
      size_t eq = end;
      while (eq < ops.size() && ops[eq] == Op::kEqual) ++eq;
      if (eq < ops.size() && eq - end <= 2 * kContext) {
        end = eq;
        continue;
      }
      end = std::min(ops.size(), end + kContext);
      break;
    }
    size_t old_count = ai[end] - ai[start];
    size_t new_count = bi[end] - bi[start];
    out += "@@ -" + Range(ai[start] + 1, old_count) + " +" +
           Range(bi[start] + 1, new_count) + " @@\n";
    for (size_t k = start; k < end; ++k) {
      switch (ops[k]) {
        case Op::kEqual: EmitLine(out, ' ', a[ai[k]]); break;
        case Op::kDelete: EmitLine(out, '-', a[ai[k]]); break;
        case Op::kInsert: EmitLine(out, '+', b[bi[k]]); break;
      }
    }
    i = end;
  }
  return out;
}

std::optional<std::string> ApplyUnifiedDiff(std::string_view old_text,
                                            std::string_view diff) {
  if (diff.empty()) return std::string(old_text);
  std::vector<std::string_view> old_lines = SplitKeepingNewlines(old_text);
  std::vector<std::string_view> patch = SplitKeepingNewlines(diff);
  static const std::regex header(R"(^@@ -(\d+)(?:,(\d+))? \+(\d+)(?:,(\d+))? @@)");
  std::string out;
  size_t next_old = 0;  // 0-based index of the next unconsumed old line
  size_t p = 0;
  while (p < patch.size() && patch[p].rfind("@@", 0) != 0) ++p;
  while (p < patch.size()) {
    std::string h(patch[p]);
    std::smatch m;
    if (!std::regex_search(h, m, header)) return std::nullopt;
    size_t old_start = std::stoul(m[1]);
    size_t old_count = m[2].matched ? std::stoul(m[2]) : 1;
    size_t first = old_count == 0 ? old_start : old_start - 1;
    if (first < next_old || first > old_lines.size()) return std::nullopt;
    for (; next_old < first; ++next_old) out.append(old_lines[next_old]);
    ++p;
    while (p < patch.size() && patch[p].rfind("@@", 0) != 0) {
      std::string_view line = patch[p++];
      if (line.empty()) return std::nullopt;
      char tag = line[0];
      std::string body(line.substr(1));
      if (tag == '\\') continue;
      if (tag == ' ' || tag == '-') {
        if (next_old >= old_lines.size()) return std::nullopt;
        std::string_view have = old_lines[next_old];
        std::string want = body;
        bool no_nl = p < patch.size() && !patch[p].empty() && patch[p][0] == '\\';
        if (no_nl && !want.empty() && want.back() == '\n') want.pop_back();
        if (have != want) return std::nullopt;
        ++next_old;
        if (tag == ' ') {
          out += want;
        }
        if (no_nl) ++p;
        continue;
      }
      if (tag == '+') {
        out += body;
        if (p < patch.size() && !patch[p].empty() && patch[p][0] == '\\') {
          if (!out.empty() && out.back() == '\n') out.pop_back();
          ++p;
        }
        continue;
      }
      return std::nullopt;
    }
  }
  for (; next_old < old_lines.size(); ++next_old) out.append(old_lines[next_old]);
  return out;
}

}  // namespace spl
