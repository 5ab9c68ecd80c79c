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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spl/catalog.h"
#include "spl/engine.h"
#include "spl/parser.h"
#include "spl/smpl.h"
#include "spl/transform.h"

namespace spl {
namespace {

namespace fs = std::filesystem;

// ---- apply and remap -----------------------------------------------------

TEST(ApplyTest, EmptyScriptIsIdentity) {
  EXPECT_EQ(Apply({}, "int x;\n"), "int x;\n");
}

TEST(ApplyTest, DeleteOneLine) {
  std::string src = "a\nb\nc\nd\n";
  EditScript s;
  s.edits.push_back({{4, 6}, "", "r", 0});
  EXPECT_EQ(Apply(s, src), "a\nb\nd\n");
}

TEST(ApplyTest, InsertionsAtOneOffsetKeepOrder) {
  EditScript s;
  s.edits.push_back({{1, 1}, "X", "r", 0});
  s.edits.push_back({{1, 1}, "Y", "r", 1});
  s.edits.push_back({{1, 2}, "Z", "r", 2});
  EXPECT_EQ(Apply(s, "abc"), "aXYZc");
}

TEST(ApplyTest, DisjointScriptsCompose) {
  std::string src = "0123456789";
  Edit e1{{1, 3}, "ab", "r", 0};
  Edit e2{{6, 7}, "", "r", 0};
  EditScript both, first, second;
  both.edits = {e1, e2};
  first.edits = {e1};
  second.edits = {e2};
  // Applying the first script, then the second remapped onto its output.
  std::optional<ByteSpan> moved = RemapSpan(first, e2.span);
  ASSERT_TRUE(moved);
  EditScript shifted;
  shifted.edits = {{*moved, e2.replacement, "r", 0}};
  EXPECT_EQ(Apply(shifted, Apply(first, src)), Apply(both, src));
}

TEST(RemapTest, ShiftsAndInvalidates) {
  EditScript s;
  s.edits.push_back({{2, 4}, "xyz", "r", 0});   // grows by one
  s.edits.push_back({{10, 10}, "++", "r", 1});  // insertion
  EXPECT_EQ(RemapSpan(s, {0, 2}), (ByteSpan{0, 2}));
  EXPECT_EQ(RemapSpan(s, {5, 8}), (ByteSpan{6, 9}));
  EXPECT_FALSE(RemapSpan(s, {3, 6}));
  EXPECT_FALSE(RemapSpan(s, {9, 11}));
  EXPECT_EQ(RemapSpan(s, {10, 12}), (ByteSpan{13, 15}));
  EXPECT_EQ(RemapSpan(s, {6, 10}), (ByteSpan{7, 11}));
}

// ---- diff ----------------------------------------------------------------

TEST(DiffTest, IdenticalInputsGiveEmptyDiff) {
  EXPECT_EQ(EmitDiff("a\nb\n", "a\nb\n", "f.c"), "");
}

TEST(DiffTest, OneInsertedLine) {
  EXPECT_EQ(EmitDiff("a\nb\nc\n", "a\nb\nX\nc\n", "f.c"),
            "--- f.c\n+++ f.c\n@@ -1,3 +1,4 @@\n a\n b\n+X\n c\n");
}

TEST(DiffTest, ContextIsThreeLinesAndHunksSplit) {
  std::string a, b;
  for (int i = 1; i <= 20; ++i) {
    a += std::to_string(i) + "\n";
    b += (i == 2 || i == 18 ? "x" : std::to_string(i)) + "\n";
  }
  EXPECT_EQ(EmitDiff(a, b, "f"),
            "--- f\n+++ f\n"
            "@@ -1,5 +1,5 @@\n 1\n-2\n+x\n 3\n 4\n 5\n"
            "@@ -15,6 +15,6 @@\n 15\n 16\n 17\n-18\n+x\n 19\n 20\n");
}

TEST(DiffTest, EmptyRangesFollowGnuConvention) {
  EXPECT_EQ(EmitDiff("", "a\n", "f"), "--- f\n+++ f\n@@ -0,0 +1 @@\n+a\n");
  EXPECT_EQ(EmitDiff("a\n", "", "f"), "--- f\n+++ f\n@@ -1 +0,0 @@\n-a\n");
}

TEST(DiffTest, MissingFinalNewlineIsMarked) {
  EXPECT_EQ(EmitDiff("a\nb", "a\nc", "f"),
            "--- f\n+++ f\n@@ -1,2 +1,2 @@\n a\n-b\n\\ No newline at end of file\n"
            "+c\n\\ No newline at end of file\n");
  EXPECT_EQ(ApplyUnifiedDiff("a\nb", EmitDiff("a\nb", "a\nb\n", "f")), "a\nb\n");
  EXPECT_EQ(ApplyUnifiedDiff("a\nb\n", EmitDiff("a\nb\n", "a\nb", "f")), "a\nb");
}

TEST(DiffTest, ReapplierRejectsMismatchedContext) {
  std::string diff = EmitDiff("a\nb\nc\n", "a\nB\nc\n", "f");
  EXPECT_FALSE(ApplyUnifiedDiff("a\nq\nc\n", diff));
}

std::string RandomText(std::mt19937& rng, int lines) {
  std::string out;
  for (int i = 0; i < lines; ++i) {
    out += std::string(1, static_cast<char>('a' + rng() % 4)) + "\n";
  }
  if (!out.empty() && rng() % 4 == 0) out.pop_back();
  return out;
}

std::string Mutate(std::mt19937& rng, const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size() - 1;
    lines.push_back(text.substr(start, nl - start + 1));
    start = nl + 1;
  }
  int edits = 1 + static_cast<int>(rng() % 4);
  for (int e = 0; e < edits; ++e) {
    size_t at = lines.empty() ? 0 : rng() % (lines.size() + 1);
    switch (rng() % 3) {
      case 0:
        lines.insert(lines.begin() + at, std::string(1, 'p' + rng() % 3) + "\n");
        break;
      case 1:
        if (at < lines.size()) lines.erase(lines.begin() + at);
        break;
      default:
        if (at < lines.size()) lines[at] = "z" + lines[at];
    }
  }
  std::string out;
  for (const std::string& l : lines) out += l;
  if (!out.empty() && out.back() != '\n' && rng() % 2) out += "\n";
  return out;
}

TEST(DiffTest, ReapplierRoundTripsRandomEdits) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string a = RandomText(rng, static_cast<int>(rng() % 30));
    std::string b = Mutate(rng, a);
    std::string diff = EmitDiff(a, b, "f");
    std::optional<std::string> c = ApplyUnifiedDiff(a, diff);
    ASSERT_TRUE(c) << a << "----\n" << diff;
    ASSERT_EQ(*c, b) << a << "----\n" << diff;
  }
}

TEST(DiffTest, SystemPatchAgreesOnRandomEdits) {
  if (!fs::exists("/usr/bin/patch")) GTEST_SKIP() << "no patch tool";
  std::mt19937 rng(99);
  fs::path dir = fs::temp_directory_path() / "spl_random_patch";
  fs::create_directories(dir);
  for (int trial = 0; trial < 40; ++trial) {
    std::string a = RandomText(rng, 5 + static_cast<int>(rng() % 30));
    std::string b = Mutate(rng, a);
    if (a == b) continue;
    WriteFile(dir / "f", a);
    WriteFile(dir / "d.diff", EmitDiff(a, b, "f"));
    std::string cmd = "cd '" + dir.string() + "' && /usr/bin/patch -s -p0 f < d.diff";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    ASSERT_EQ(ReadFile(dir / "f"), b);
  }
  fs::remove_all(dir);
}

// ---- planning ------------------------------------------------------------

PlanResult PlanFirst(const std::string& smpl, const std::string& program,
                     SyntaxTree* tree_out = nullptr) {
  RuleSet set = ParseSmpl(smpl);
  SyntaxTree tree = Parse(program);
  std::vector<MatchResult> ms = MatchPattern(set.rules[0], tree, {});
  PlanResult plan = PlanEdits(set.rules[0], ms, tree);
  if (tree_out) *tree_out = tree;
  return plan;
}

TEST(PlanTest, MarkersGoInsideTheBlock) {
  std::string src = "void f(void)\n{\n#pragma omp parallel\n  {\n    g();\n  }\n}\n";
  RuleSet set = ParseSmpl(ReadFile(std::string(SPL_CATALOG_DIR) +
                                   "/fx_likwid__two_blocks/rule.cocci"));
  SyntaxTree tree = Parse(src);
  const Rule& rule = set.rules[1];
  PlanResult plan = PlanEdits(rule, MatchPattern(rule, tree, {}), tree);
  ASSERT_EQ(plan.script.edits.size(), 2u);
  EXPECT_EQ(plan.script.edits[0].replacement, "    LIKWID_MARKER_START(__func__);\n");
  EXPECT_EQ(plan.script.edits[0].span.begin, src.find("    g();"));
  EXPECT_EQ(plan.script.edits[1].replacement, "    LIKWID_MARKER_STOP(__func__);\n");
  EXPECT_EQ(plan.script.edits[1].span.begin, src.find("  }\n}"));
}

TEST(PlanTest, ChevronRewrite) {
  std::string src = "void f(void)\n{\n  k<<<b,t,0,s>>>(x,n);\n}\n";
  PlanResult plan = PlanFirst(
      "@@\nidentifier k;\nexpression b,t,x,y;\nexpression list el;\n@@\n"
      "- k<<<b,t,x,y>>>(el)\n+ hipLaunchKernelGGL(k,b,t,x,y,el)\n",
      src);
  EXPECT_EQ(Apply(plan.script, src),
            "void f(void)\n{\n  hipLaunchKernelGGL(k,b,t,0,s,x,n);\n}\n");
}

TEST(PlanTest, EmptyListDropsComma) {
  std::string src = "void f(void)\n{\n  k<<<b,t,0,s>>>();\n}\n";
  PlanResult plan = PlanFirst(
      "@@\nidentifier k;\nexpression b,t,x,y;\nexpression list el;\n@@\n"
      "- k<<<b,t,x,y>>>(el)\n+ hipLaunchKernelGGL(k,b,t,x,y,el)\n",
      src);
  EXPECT_EQ(Apply(plan.script, src),
            "void f(void)\n{\n  hipLaunchKernelGGL(k,b,t,0,s);\n}\n");
}

TEST(PlanTest, StatementDeletionTakesWholeLine) {
  std::string src = "void f(void)\n{\n  a();\n  b();\n  c();\n}\n";
  PlanResult plan = PlanFirst("@@\n@@\n- b();\n", src);
  ASSERT_EQ(plan.script.edits.size(), 1u);
  EXPECT_EQ(Apply(plan.script, src), "void f(void)\n{\n  a();\n  c();\n}\n");
}

TEST(PlanTest, FunctionDeletionTakesTrailingBlankLine) {
  std::string src = "int a(void)\n{\n  return 1;\n}\n\nint b(void)\n{\n  return 2;\n}\n";
  PlanResult plan = PlanFirst(
      "@@\nidentifier f =~ \"^a$\";\ntype T;\n@@\n- T f(...) { ... }\n", src);
  EXPECT_EQ(Apply(plan.script, src), "int b(void)\n{\n  return 2;\n}\n");
}

TEST(PlanTest, ContainmentRewritesEveryOccurrence) {
  std::string src = "void f(void)\n{\n  y[i+1] = x[i+1] * 2;\n}\n";
  PlanResult plan = PlanFirst(
      "@@\nidentifier i;\nstatement B;\n@@\n\\( B \\&\n- i+1\n+ i+0\n\\)\n", src);
  EXPECT_EQ(Apply(plan.script, src), "void f(void)\n{\n  y[i+0] = x[i+0] * 2;\n}\n");
}

TEST(PlanTest, InsertionIndentFollowsAnchor) {
  std::string src = "void f(void)\n{\n    if (p)\n        a();\n}\n";
  PlanResult plan = PlanFirst("@@\n@@\n+ before();\n  a();\n", src);
  EXPECT_EQ(Apply(plan.script, src),
            "void f(void)\n{\n    if (p)\n        before();\n        a();\n}\n");
}

}  // namespace
}  // namespace spl
