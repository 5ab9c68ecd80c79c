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

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spl/lexer.h"
#include "spl/match.h"
#include "spl/parser.h"
#include "spl/smpl.h"

namespace spl {
namespace {

std::vector<MatchResult> MatchFirstRule(const std::string& smpl,
                                        const std::string& program,
                                        bool all_sites = false) {
  RuleSet set = ParseSmpl(smpl);
  SyntaxTree tree = Parse(program);
  MatchOptions o;
  o.all_sites = all_sites;
  return MatchPattern(set.rules.at(0), tree, {}, o);
}

std::string Bound(const MatchResult& m, const std::string& name) {
  return m.bindings.at(name).text;
}

// ---- dots oracle ---------------------------------------------------------

const char* const kAlphabet[] = {"a();", "b();", "c();", "d();", "e();"};

struct Program {
  std::string text;
  std::vector<ByteSpan> stmts;
};

Program MakeProgram(const std::vector<int>& seq) {
  Program p;
  p.text = "void f(void)\n{\n";
  for (int s : seq) {
    p.text += "  ";
    size_t begin = p.text.size();
    p.text += kAlphabet[s];
    p.stmts.push_back({begin, p.text.size()});
    p.text += "\n";
  }
  p.text += "}\n";
  return p;
}

using Site = std::pair<int, int>;  // first and last statement index

std::vector<Site> Oracle(const std::vector<int>& seq, int x, int y,
                         bool all_sites) {
  std::vector<Site> out;
  int n = static_cast<int>(seq.size());
  int from = 0;
  for (int i = 0; i < n; ++i) {
    if (i < from || seq[i] != x) continue;
    for (int j = i + 1; j < n; ++j) {
      if (seq[j] == y) {
        out.push_back({i, j});
        if (!all_sites) from = j + 1;
        break;
      }
    }
  }
  return out;
}

std::vector<Site> Sites(const std::vector<MatchResult>& ms, const Program& p) {
  std::vector<Site> out;
  for (const MatchResult& m : ms) {
    int first = -1, last = -1;
    for (size_t k = 0; k < p.stmts.size(); ++k) {
      if (p.stmts[k].begin == m.site.begin) first = static_cast<int>(k);
      if (p.stmts[k].end == m.site.end) last = static_cast<int>(k);
    }
    out.push_back({first, last});
  }
  return out;
}

std::string DotsRule(int x, int y, bool dots) {
  std::string body = std::string(kAlphabet[x]) + "\n" + (dots ? "...\n" : "") +
                     kAlphabet[y] + "\n";
  return "@@\n@@\n" + body;
}

TEST(DotsOracleTest, AgreesWithBruteForceOnAllShortSequences) {
  std::vector<RuleSet> dots_rules, adjacent_rules;
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      dots_rules.push_back(ParseSmpl(DotsRule(x, y, true)));
      adjacent_rules.push_back(ParseSmpl(DotsRule(x, y, false)));
    }
  }
  size_t checked = 0;
  for (int len = 0; len <= 6; ++len) {
    std::vector<int> seq(len, 0);
    while (true) {
      Program p = MakeProgram(seq);
      SyntaxTree tree = Parse(p.text);
      for (int x = 0; x < 5; ++x) {
        for (int y = 0; y < 5; ++y) {
          const Rule& rule = dots_rules[x * 5 + y].rules[0];
          for (bool all : {false, true}) {
            MatchOptions o;
            o.all_sites = all;
            std::vector<Site> got = Sites(MatchPattern(rule, tree, {}, o), p);
            ASSERT_EQ(got, Oracle(seq, x, y, all))
                << p.text << "pattern " << x << " ... " << y << " all=" << all;
            ++checked;
            if (!all) continue;
            // Dropping the dots can only shrink the set of sites.
            const Rule& adj = adjacent_rules[x * 5 + y].rules[0];
            for (const Site& s : Sites(MatchPattern(adj, tree, {}, o), p)) {
              bool found = false;
              for (const Site& d : got) found = found || d.first == s.first;
              EXPECT_TRUE(found);
            }
          }
        }
      }
      int k = 0;
      while (k < len && ++seq[k] == 5) seq[k++] = 0;
      if (k == len) break;
    }
  }
  EXPECT_GT(checked, 900000u);
}

// ---- binding consistency ---------------------------------------------------

class ExprGen {
 public:
  explicit ExprGen(uint32_t seed) : rng_(seed) {}

  // Expression text, built from a random tree.
  std::string Gen(int depth) {
    int pick = Pick(depth <= 0 ? 2 : 6);
    switch (pick) {
      case 0: return Choose({"x", "y", "z"});
      case 1: return Choose({"0", "1", "2"});
      case 2: return Gen(depth - 1) + Choose({"+", "-", "*"}) + Gen(depth - 1);
      case 3: return "f(" + Gen(depth - 1) + ")";
      case 4: return "v[" + Gen(depth - 1) + "]";
      default: return "(" + Gen(depth - 1) + ")";
    }
  }

  // Same tokens with different spacing.
  std::string Respace(const std::string& e) {
    std::string out;
    for (const Token& t : Lex(e)) {
      if (t.IsTrivia()) continue;
      out += t.text;
      if (Pick(2)) out += " ";
    }
    return out;
  }

  // Changes exactly one leaf token to a different one.
  std::string Mutate(const std::string& e) {
    std::vector<Token> toks = Lex(e);
    std::vector<size_t> leaves;
    for (size_t i = 0; i < toks.size(); ++i) {
      if (toks[i].kind == TokenKind::kIdentifier && toks[i].text != "f" &&
          toks[i].text != "v") {
        leaves.push_back(i);
      }
      if (toks[i].kind == TokenKind::kLiteral) leaves.push_back(i);
    }
    size_t victim = leaves[Pick(static_cast<int>(leaves.size()))];
    std::string out;
    for (size_t i = 0; i < toks.size(); ++i) {
      if (i != victim) {
        out += toks[i].text;
      } else if (toks[i].kind == TokenKind::kLiteral) {
        out += toks[i].text == "9" ? "8" : "9";
      } else {
        out += toks[i].text == "w" ? "u" : "w";
      }
    }
    return out;
  }

 private:
  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::string Choose(std::initializer_list<const char*> xs) {
    return *(xs.begin() + Pick(static_cast<int>(xs.size())));
  }
  std::mt19937 rng_;
};

constexpr char kRepeatRule[] = "@@\nexpression E;\n@@\ng(E, E);\n";

TEST(BindingConsistencyTest, RepeatedMetavariableBindsEqualTerms) {
  ExprGen gen(12345);
  for (int trial = 0; trial < 400; ++trial) {
    std::string e = gen.Gen(trial % 4);
    std::string same = gen.Respace(e);
    std::string program = "void h(void)\n{\n  g(" + e + ", " + same + ");\n}\n";
    std::vector<MatchResult> ms = MatchFirstRule(kRepeatRule, program);
    ASSERT_EQ(ms.size(), 1u) << program;
    std::vector<std::string_view> texts;
    std::vector<Token> toks = Lex(e);
    for (const Token& t : toks) {
      if (!t.IsTrivia()) texts.push_back(t.text);
    }
    EXPECT_EQ(ms[0].bindings.at("E").key, KeyOf(texts));
    EXPECT_EQ(Bound(ms[0], "E"), e);
  }
}

TEST(BindingConsistencyTest, MutatedInstanceNeverMatches) {
  ExprGen gen(777);
  for (int trial = 0; trial < 400; ++trial) {
    std::string e = gen.Gen(trial % 4);
    std::string other = gen.Mutate(gen.Respace(e));
    std::string program = "void h(void)\n{\n  g(" + e + ", " + other + ");\n}\n";
    EXPECT_TRUE(MatchFirstRule(kRepeatRule, program).empty()) << program;
  }
}

TEST(BindingConsistencyTest, InheritedValueMustAgree) {
  RuleSet set = ParseSmpl("@@\nidentifier x;\n@@\nx = 0;\n");
  SyntaxTree tree = Parse("void h(void)\n{\n  a = 0;\n  b = 0;\n}\n");
  Bindings pre;
  BoundValue b;
  b.kind = MetaKind::kIdentifier;
  b.text = b.key = "b";
  pre["x"] = b;
  std::vector<MatchResult> ms = MatchPattern(set.rules[0], tree, pre);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(tree.source().substr(ms[0].site.begin, ms[0].site.size()), "b = 0;");
}

// ---- examples ----------------------------------------------------------

TEST(MatchExampleTest, TripleSubscriptBindsIndices) {
  auto ms = MatchFirstRule(
      "@@\nsymbol a;\nexpression x,y,z;\n@@\n- a[x][y][z]\n+ a[x, y, z]\n",
      "void h(void)\n{\n  q = a[i][j+1][k];\n}\n");
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(Bound(ms[0], "x"), "i");
  EXPECT_EQ(Bound(ms[0], "y"), "j+1");
  EXPECT_EQ(Bound(ms[0], "z"), "k");
}

TEST(MatchExampleTest, SymbolOnlyMatchesItself) {
  auto ms = MatchFirstRule(
      "@@\nsymbol a;\nexpression x,y,z;\n@@\n- a[x][y][z]\n+ a[x, y, z]\n",
      "void h(void)\n{\n  q = b[i][j][k];\n}\n");
  EXPECT_TRUE(ms.empty());
}

TEST(MatchExampleTest, RegexIsSubstringSearch) {
  const std::string rule =
      "@@\ntype T;\nidentifier f =~ \"kernel\";\nparameter list PL;\n"
      "statement list SL;\n@@\n- T f (PL) { SL }\n";
  EXPECT_TRUE(MatchFirstRule(rule, "int saxpy(int a)\n{\n  return a;\n}\n").empty());
  auto ms = MatchFirstRule(rule, "int dot_kernel(int a)\n{\n  return a;\n}\n");
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(Bound(ms[0], "f"), "dot_kernel");
  EXPECT_EQ(Bound(ms[0], "PL"), "int a");
}

TEST(MatchExampleTest, UnrolledLoopHeader) {
  const std::string rule =
      "@@\ntype T;\nidentifier i,l;\nconstant k={4};\nstatement S;\n@@\n"
      "for (T i=0; i+k-1 < l; i+=k) S\n";
  auto ms = MatchFirstRule(
      rule, "void h(int n)\n{\n  for (int i=0; i+4-1 < n; i+=4) ;\n}\n");
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(Bound(ms[0], "T"), "int");
  EXPECT_EQ(Bound(ms[0], "l"), "n");
  EXPECT_EQ(Bound(ms[0], "k"), "4");
  EXPECT_TRUE(MatchFirstRule(
                  rule, "void h(int n)\n{\n  for (int i=0; i+2-1 < n; i+=2) ;\n}\n")
                  .empty());
}

TEST(MatchExampleTest, PragmaDotsAbsorbRestOfLine) {
  const std::string rule = "@@\n@@\n#pragma omp ...\n";
  auto ms = MatchFirstRule(
      rule, "void h(void)\n{\n#pragma omp parallel for\n  for (;;) ;\n}\n");
  EXPECT_EQ(ms.size(), 1u);
  EXPECT_TRUE(MatchFirstRule(rule, "void h(void)\n{\n#pragma acc kernels\n}\n")
                  .empty());
}

TEST(MatchExampleTest, DisjunctionTakesFirstSucceedingBranch) {
  const std::string rule =
      "@@\nexpression E;\n@@\n(\n- E == 0\n|\n- 0 == E\n)\n";
  auto ms = MatchFirstRule(rule, "int h(int p)\n{\n  return 0 == 0;\n}\n");
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].choices.begin()->second, 0);
  ms = MatchFirstRule(rule, "int h(int p)\n{\n  return 0 == p;\n}\n");
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].choices.begin()->second, 1);
}

TEST(MatchExampleTest, ContainmentBindsFirstPreorderOccurrence) {
  const std::string rule =
      "@@\nstatement S;\nexpression E;\n@@\n\\( S \\& g(E) \\)\n";
  auto ms = MatchFirstRule(rule, "void h(void)\n{\n  x = g(1) + g(2);\n}\n");
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(Bound(ms[0], "E"), "1");
  EXPECT_EQ(Bound(ms[0], "S"), "x = g(1) + g(2);");
}

TEST(MatchExampleTest, PositionBindsSiteLocation) {
  auto ms = MatchFirstRule("@@\nidentifier fn;\nposition p;\n@@\n fn@p(...)\n",
                           "void h(void)\n{\n  foo(1);\n}\n");
  ASSERT_EQ(ms.size(), 1u);
  const BoundValue& p = ms[0].bindings.at("p");
  EXPECT_EQ(p.position.line, 3u);
  EXPECT_EQ(p.position.column, 3u);
}

TEST(MatchExampleTest, SetConstraintOnIdentifier) {
  const std::string rule =
      "@@\nidentifier c = {i,j};\nexpression n;\nstatement S;\n@@\n"
      "for (...;c<n;...) S\n";
  EXPECT_EQ(MatchFirstRule(rule, "void h(int n)\n{\n  for (int j = 0; j < n; j++) ;\n}\n")
                .size(),
            1u);
  EXPECT_TRUE(MatchFirstRule(rule, "void h(int n)\n{\n  for (int m = 0; m < n; m++) ;\n}\n")
                  .empty());
}

TEST(MatchExampleTest, NonOverlappingLeftmostSites) {
  auto ms = MatchFirstRule("@@\n@@\n- a();\n  ...\n- b();\n",
                           "void h(void)\n{\n  a();\n  a();\n  b();\n  b();\n}\n");
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].site.begin, 17u);
}

TEST(MatchDeterminismTest, RepeatedRunsAgree) {
  const std::string rule =
      "@@\nidentifier fn;\nexpression list el;\nposition p;\n@@\n fn@p(el)\n";
  const std::string program =
      "void h(void)\n{\n  f(g(1), k(h(2)));\n  m(n(), o());\n}\n";
  auto a = MatchFirstRule(rule, program, true);
  auto b = MatchFirstRule(rule, program, true);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_EQ(a.size(), 7u);
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].site, b[i].site);
    EXPECT_EQ(a[i].bindings, b[i].bindings);
    EXPECT_EQ(a[i].token_map, b[i].token_map);
  }
}

}  // namespace
}  // namespace spl
