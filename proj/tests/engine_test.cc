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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spl/catalog.h"
#include "spl/engine.h"
#include "spl/smpl.h"
#include "spl/syntax_tree.h"
#include "spl/transform.h"

namespace spl {
namespace {

RunResult RunText(const std::string& smpl, const std::string& program,
                  Dialect dialect = Dialect::kC) {
  RunOptions o;
  o.dialect = dialect;
  o.path = "t.c";
  return RunRules(ParseSmpl(smpl), program, o);
}

std::string CatalogRule(const std::string& id) {
  return ReadFile(std::string(SPL_CATALOG_DIR) + "/" + id + "/rule.cocci");
}

// ---- scheduling ----------------------------------------------------------

constexpr char kUnrolled[] =
    "void f(double *y, int n)\n{\n  for (int i=0; i+4-1 < n; i+=4)\n  {\n"
    "    y[i+0] = 1;\n    y[i+1] = 1;\n    y[i+2] = 1;\n    y[i+3] = 1;\n"
    "  }\n}\n";
constexpr char kFalseUnroll[] =
    "void f(double *y, int n)\n{\n  for (int i=0; i+4-1 < n; i+=4)\n  {\n"
    "    y[i+0] = 1;\n    y[i+1] = 2;\n    y[i+2] = 1;\n    y[i+3] = 1;\n"
    "  }\n}\n";

TEST(ScheduleTest, LaterRuleSeesEarlierRewrite) {
  RunResult r = RunText(CatalogRule("fx_unroll_p1r1__true_unroll"), kUnrolled);
  EXPECT_TRUE(r.matched.at("p1"));
  EXPECT_TRUE(r.matched.at("r1"));
  EXPECT_EQ(r.output,
            "void f(double *y, int n)\n{\n  #pragma omp unroll partial (4)\n"
            "  for (int i=0; i < n; ++i)\n  {\n    y[i+0] = 1;\n  }\n}\n");
  ASSERT_EQ(r.stages.size(), 2u);  // undo is skipped
  EXPECT_EQ(r.stages[1].source_before.find("y[i+1]"), std::string::npos);
}

TEST(ScheduleTest, FalseUnrollIsRestoredByUndo) {
  RunResult r = RunText(CatalogRule("fx_unroll_p1r1__true_unroll"), kFalseUnroll);
  EXPECT_EQ(r.match_counts.at("p1"), 1u);
  EXPECT_EQ(r.match_counts.at("r1"), 0u);
  EXPECT_EQ(r.match_counts.at("undo"), 1u);
  EXPECT_EQ(r.output, kFalseUnroll);
}

TEST(ScheduleTest, FalseUnrollWithoutUndoKeepsTheHazard) {
  std::string smpl = CatalogRule("fx_unroll_p1r1__true_unroll");
  smpl = smpl.substr(0, smpl.find("@undo"));
  RunResult r = RunText(smpl, kFalseUnroll);
  EXPECT_EQ(r.match_counts.at("r1"), 0u);
  EXPECT_NE(r.output, kFalseUnroll);
  EXPECT_NE(r.output.find("y[i+0] = 2;"), std::string::npos);
}

constexpr char kDepRules[] =
    "@rl@\n@@\n- a();\n+ b();\n\n"
    "@ah depends on rl@\n@@\n  #include <x.h>\n+ #include <y.h>\n\n"
    "@nah depends on !rl@\n@@\n  #include <x.h>\n+ #include <z.h>\n";

TEST(DependencyTest, FiresWhenDependencyMatched) {
  RunResult r = RunText(kDepRules, "#include <x.h>\nvoid f(void)\n{\n  a();\n}\n");
  EXPECT_TRUE(r.matched.at("ah"));
  EXPECT_FALSE(r.matched.at("nah"));
  EXPECT_EQ(r.skipped, std::vector<std::string>{"nah"});
  EXPECT_EQ(r.output,
            "#include <x.h>\n#include <y.h>\nvoid f(void)\n{\n  b();\n}\n");
}

TEST(DependencyTest, SkippedWhenDependencyDidNotMatch) {
  RunResult r = RunText(kDepRules, "#include <x.h>\nvoid f(void)\n{\n  c();\n}\n");
  EXPECT_FALSE(r.matched.at("rl"));
  EXPECT_FALSE(r.matched.at("ah"));
  EXPECT_TRUE(r.matched.at("nah"));
  EXPECT_EQ(r.skipped, std::vector<std::string>{"ah"});
  EXPECT_EQ(r.output, "#include <x.h>\n#include <z.h>\nvoid f(void)\n{\n  c();\n}\n");
}

TEST(DependencyTest, SkippedRuleNeverMatchesAcrossRandomInputs) {
  // Schedule soundness over a small family of inputs.
  for (int mask = 0; mask < 8; ++mask) {
    std::string body;
    if (mask & 1) body += "  a();\n";
    if (mask & 2) body += "  c();\n";
    if (mask & 4) body += "  a();\n";
    RunResult r = RunText(kDepRules, "#include <x.h>\nvoid f(void)\n{\n" + body + "}\n");
    bool rl = r.matched.at("rl");
    EXPECT_EQ(rl, (mask & 5) != 0);
    if (!rl) EXPECT_EQ(r.match_counts.at("ah"), 0u);
    if (rl) EXPECT_EQ(r.match_counts.at("nah"), 0u);
  }
}

// ---- inheritance and scripts ---------------------------------------------

TEST(InheritanceTest, InheritedRuleRunsOncePerBinding) {
  const char* smpl =
      "@c@\nidentifier f;\n@@\n- g(f);\n\n"
      "@d@\nidentifier c.f;\n@@\n- f();\n";
  RunResult r = RunText(smpl,
                        "void h(void)\n{\n  g(p);\n  g(q);\n  p();\n  q();\n  r();\n}\n");
  EXPECT_EQ(r.match_counts.at("c"), 2u);
  EXPECT_EQ(r.match_counts.at("d"), 2u);
  EXPECT_EQ(r.output, "void h(void)\n{\n  r();\n}\n");
}

TEST(InheritanceTest, NothingInheritedMeansNoRun) {
  const char* smpl =
      "@c@\nidentifier f;\n@@\n- g(f);\n\n"
      "@d@\nidentifier c.f;\n@@\n- f();\n";
  RunResult r = RunText(smpl, "void h(void)\n{\n  p();\n}\n");
  EXPECT_EQ(r.match_counts.at("d"), 0u);
  EXPECT_EQ(r.output, "void h(void)\n{\n  p();\n}\n");
}

constexpr char kTableRules[] =
    "@initialize:python@ @@\nM = { \"old\": \"fresh\" }\n\n"
    "@r@\nidentifier fn;\n@@\n fn(...)\n\n"
    "@script:python s@\nfn << r.fn;\nnf;\n@@\ncoccinelle.nf = cocci.make_ident(M[fn])\n\n"
    "@t@\nidentifier r.fn;\nidentifier s.nf;\n@@\n- fn\n+ nf\n  (...)\n";

TEST(ScriptTest, TableLookupRenames) {
  RunResult r = RunText(kTableRules, "void h(void)\n{\n  old(1);\n}\n");
  EXPECT_EQ(r.output, "void h(void)\n{\n  fresh(1);\n}\n");
  EXPECT_TRUE(r.warnings.empty());
}

TEST(ScriptTest, TableMissDropsMatchWithWarning) {
  RunResult r = RunText(kTableRules, "void h(void)\n{\n  old(1);\n  other(2);\n}\n");
  EXPECT_EQ(r.output, "void h(void)\n{\n  fresh(1);\n  other(2);\n}\n");
  EXPECT_EQ(r.match_counts.at("s"), 1u);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("'other'"), std::string::npos);
  EXPECT_NE(r.warnings[0].find("table M"), std::string::npos);
}

TEST(ScriptTest, MakeIdentRejectsNonIdentifier) {
  const char* smpl =
      "@r@\nidentifier fn;\n@@\n fn(...)\n\n"
      "@script:python s@\nfn << r.fn;\nnf;\n@@\n"
      "coccinelle.nf = cocci.make_ident(\"not an id\")\n";
  EXPECT_THROW(RunText(smpl, "void h(void)\n{\n  a(1);\n}\n"), ScriptError);
}

TEST(ScriptTest, ConcatIsExempt) {
  const char* smpl =
      "@r@\nstatement S;\n@@\n\\( S \\& g() \\)\n\n"
      "@script:python s@\nS << r.S;\nout;\n@@\n"
      "coccinelle.out = \"LAMBDA(int i)\" + S\n\n"
      "@t@\nstatement r.S;\nidentifier s.out;\n@@\n- S\n+ wrap(out);\n";
  RunResult r = RunText(smpl, "void h(void)\n{\n  { g(); }\n}\n", Dialect::kCExt);
  EXPECT_EQ(r.output, "void h(void)\n{\n  wrap(LAMBDA(int i){ g(); });\n}\n");
}

TEST(ScriptTest, MakeTypeValidates) {
  const char* smpl =
      "@r@\ntype T;\nidentifier i;\n@@\n T i;\n\n"
      "@script:python s@\nT << r.T;\nU;\n@@\ncoccinelle.U = cocci.make_type(\"unsigned long *\")\n\n"
      "@t@\ntype r.T;\nidentifier r.i;\ntype s.U;\n@@\n- T i;\n+ U i;\n";
  RunResult r = RunText(smpl, "void h(void)\n{\n  int k;\n}\n");
  EXPECT_EQ(r.output, "void h(void)\n{\n  unsigned long * k;\n}\n");
}

// ---- fresh identifiers ---------------------------------------------------

MetavarDecl FreshDecl(std::vector<FreshPart> parts) {
  MetavarDecl d;
  d.name = "g";
  d.kind = MetaKind::kFreshIdentifier;
  d.fresh_template = std::move(parts);
  return d;
}

Bindings Bind(const std::string& name, const std::string& text) {
  BoundValue v;
  v.text = v.key = text;
  return {{name, v}};
}

TEST(FreshTest, ConcatenatesTemplate) {
  std::set<std::string> taken;
  EXPECT_EQ(GenerateFresh(FreshDecl({{true, "avx512_"}, {false, "f"}}),
                          Bind("f", "dot_kernel"), taken),
            "avx512_dot_kernel");
  EXPECT_EQ(GenerateFresh(FreshDecl({{true, "a_"}, {true, "b_"}, {false, "f"}}),
                          Bind("f", "g"), taken),
            "a_b_g");
}

TEST(FreshTest, CollisionGetsSuffix) {
  std::set<std::string> taken = {"avx512_dot_kernel", "avx512_dot_kernel_1"};
  EXPECT_EQ(GenerateFresh(FreshDecl({{true, "avx512_"}, {false, "f"}}),
                          Bind("f", "dot_kernel"), taken),
            "avx512_dot_kernel_2");
  EXPECT_TRUE(taken.count("avx512_dot_kernel_2"));
}

TEST(FreshTest, UnboundPartThrows) {
  std::set<std::string> taken;
  EXPECT_THROW(GenerateFresh(FreshDecl({{false, "f"}}), {}, taken),
               SubstitutionError);
}

TEST(FreshTest, VariantCloneAvoidsExistingName) {
  Fixture f;
  for (const Fixture& x : LoadCatalog(SPL_CATALOG_DIR)) {
    if (x.id == "fx_variant__name_collision") f = x;
  }
  std::string input = ReadFile(f.input_path());
  RunResult r = RunFixture(f, input);
  SyntaxTree before = Parse(input);
  SyntaxTree after = Parse(r.output);
  std::set<std::string> old_ids;
  for (size_t i = 0; i < before.sig_count(); ++i) {
    if (before.sig(i).kind == TokenKind::kIdentifier) {
      old_ids.insert(std::string(before.sig(i).text));
    }
  }
  std::set<std::string> fresh;
  for (size_t i = 0; i < after.sig_count(); ++i) {
    const Token& t = after.sig(i);
    if (t.kind == TokenKind::kIdentifier && !old_ids.count(std::string(t.text))) {
      fresh.insert(std::string(t.text));
    }
  }
  EXPECT_EQ(fresh, (std::set<std::string>{"avx10_dot_kernel", "avx512_dot_kernel_1"}));
}

// ---- errors and conflicts ------------------------------------------------

TEST(EngineErrorTest, ExtensionNeedsDialect) {
  const char* smpl = "@@\n@@\n- a();\n";
  const char* program = "void h(void)\n{\n  k<<<1, 2, 0, s>>>(x);\n}\n";
  try {
    RunText(smpl, program, Dialect::kC);
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.where().line, 3u);
    EXPECT_NE(std::string(e.what()).find("c-ext"), std::string::npos);
  }
  EXPECT_NO_THROW(RunText(smpl, program, Dialect::kCExt));
}

TEST(EngineErrorTest, RewriteIntoExtensionFailsInPlainC) {
  const char* smpl = "@@\nsymbol a;\nexpression x,y;\n@@\n- a[x][y]\n+ a[x, y]\n";
  EXPECT_THROW(RunText(smpl, "void h(void)\n{\n  q = a[1][2];\n}\n"), SyntaxError);
}

TEST(EngineErrorTest, DialectFromHint) {
  RuleSet with = ParseSmpl("# spatch --c++=17\n@@\n@@\n- a();\n");
  RuleSet without = ParseSmpl("@@\n@@\n- a();\n");
  EXPECT_EQ(EffectiveDialect(with, std::nullopt), Dialect::kCExt);
  EXPECT_EQ(EffectiveDialect(without, std::nullopt), Dialect::kC);
  EXPECT_EQ(EffectiveDialect(with, Dialect::kC), Dialect::kC);
}

TEST(ConflictTest, NestedLoopsKeepOuterAndWarn) {
  const std::string program =
      "#include <cmath>\n\nvoid f(double *x, int n)\n{\n"
      "  for (int i = 0; i < n; ++i) {\n"
      "    for (int j = 0; j < n; ++j) {\n      x[j] = i;\n    }\n  }\n}\n";
  RunResult r = RunText(CatalogRule("fx_kokkos__reduction"), program, Dialect::kCExt);
  EXPECT_EQ(r.match_counts.at("r1"), 2u);
  EXPECT_EQ(r.match_counts.at("r3"), 1u);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("t.c:7:5: rule r3: match overlaps"), std::string::npos)
      << r.warnings[0];
  EXPECT_NE(r.output.find("parallel_for(RangePolicy<HostExecutionSpace>(0,n), "
                          "KOKKOS_LAMBDA(const int i){\n    for (int j"),
            std::string::npos)
      << r.output;
}

TEST(ConflictTest, UnboundPlusMetavariableIsSubstitutionError) {
  const char* smpl = "@@\nidentifier f, g;\n@@\n- f();\n+ g();\n";
  EXPECT_THROW(RunText(smpl, "void h(void)\n{\n  a();\n}\n"), SubstitutionError);
}

}  // namespace
}  // namespace spl
