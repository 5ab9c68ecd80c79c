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
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smpl_internal.h"
#include "spl/lexer.h"
#include "spl/parser.h"
#include "spl/smpl.h"

namespace spl {

using smpl_internal::SplitLines;
using smpl_internal::SplitTopLevel;
using smpl_internal::Trim;

const char* MetaKindName(MetaKind kind) {
  switch (kind) {
    case MetaKind::kType: return "type";
    case MetaKind::kIdentifier: return "identifier";
    case MetaKind::kFunction: return "function";
    case MetaKind::kParameterList: return "parameter list";
    case MetaKind::kStatement: return "statement";
    case MetaKind::kStatementList: return "statement list";
    case MetaKind::kExpression: return "expression";
    case MetaKind::kExpressionList: return "expression list";
    case MetaKind::kConstant: return "constant";
    case MetaKind::kPosition: return "position";
    case MetaKind::kSymbol: return "symbol";
    case MetaKind::kPragmaInfo: return "pragmainfo";
    case MetaKind::kFreshIdentifier: return "fresh identifier";
  }
  return "?";
}

PatternRole RoleOf(MetaKind kind) {
  switch (kind) {
    case MetaKind::kType: return PatternRole::kType;
    case MetaKind::kStatement: return PatternRole::kStatement;
    case MetaKind::kStatementList: return PatternRole::kStatementList;
    case MetaKind::kParameterList: return PatternRole::kParameterList;
    case MetaKind::kExpressionList: return PatternRole::kExpressionList;
    default: return PatternRole::kNone;
  }
}

const MetavarDecl* Rule::FindMetavar(std::string_view local) const {
  for (const MetavarDecl& m : metavars) {
    if (m.name == local) return &m;
  }
  return nullptr;
}

const Rule* RuleSet::Find(std::string_view name) const {
  int i = IndexOf(name);
  return i < 0 ? nullptr : &rules[i];
}

int RuleSet::IndexOf(std::string_view name) const {
  for (size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

struct RawRule {
  Rule rule;
  std::vector<std::pair<int, std::string>> decls;
  std::vector<std::string> body;
  int body_line = 0;
};

const std::regex& ScriptHeader() {
  static const std::regex re(
      R"(^\s*(script|initialize|finalize)\s*:\s*(\w+)\s*(\w*)\s*$)");
  return re;
}

const std::regex& PatternHeader() {
  static const std::regex re(
      R"(^\s*(\w*)\s*(?:depends\s+on\s+(!?)\s*(\w+))?\s*$)");
  return re;
}

const std::regex& DialectLine() {
  static const std::regex re(R"(^#\s*spatch\s+--(c\+\+(?:=\w+)?)\s*$)");
  return re;
}

void ParseHeader(const std::string& content, int line, int& anon,
                 Rule& rule) {
  std::smatch m;
  rule.line = line;
  if (std::regex_match(content, m, ScriptHeader())) {
    if (m[2] != "python") {
      throw SmplError("unsupported script language '" + m[2].str() + "'",
                      line);
    }
    if (m[1] == "finalize") {
      throw SmplError("finalize rules are not supported", line);
    }
    rule.kind = m[1] == "initialize" ? Rule::Kind::kInitializer
                                     : Rule::Kind::kScript;
    rule.name = m[3];
    if (rule.kind == Rule::Kind::kScript && rule.name.empty()) {
      throw SmplError("script rule needs a name", line);
    }
  } else if (std::regex_match(content, m, PatternHeader())) {
    rule.kind = Rule::Kind::kPattern;
    rule.name = m[1];
    if (m[3].matched) {
      rule.dependency.kind = m[2].length() ? Dependency::Kind::kNotMatched
                                           : Dependency::Kind::kMatched;
      rule.dependency.rule = m[3];
    }
  } else {
    throw SmplError("malformed rule header '@" + content + "@'", line);
  }
  if (rule.name.empty()) {
    rule.anonymous = true;
    rule.name = "__anon" + std::to_string(anon++);
  }
}

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

// Replaces a column-0 disjunction/conjunction marker line with its escaped
// form, so both notations reach the pattern parser identically.
std::string ContextLine(const std::string& line) {
  std::string t = Trim(line);
  if (t.size() == 1 && !line.empty() && line[0] == t[0] &&
      (t == "(" || t == "|" || t == ")" || t == "&")) {
    return "\\" + t;
  }
  return line;
}

void BuildPattern(RawRule& raw) {
  Rule& rule = raw.rule;
  PatternBody& body = rule.body;
  body.raw_lines = raw.body;
  std::string src;
  std::vector<size_t> line_start;
  std::vector<LineTag> line_tag;
  bool chunk_open = false;
  std::vector<size_t> chunk_offset;
  for (size_t i = 0; i < raw.body.size(); ++i) {
    const std::string& l = raw.body[i];
    int file_line = raw.body_line + static_cast<int>(i);
    line_start.push_back(src.size());
    if (!l.empty() && l[0] == '+') {
      if (!chunk_open) {
        body.plus.push_back({0, {}, file_line});
        chunk_offset.push_back(src.size());
        chunk_open = true;
      }
      body.plus.back().lines.push_back(l.substr(1));
      line_tag.push_back(LineTag::kPlus);
      src += "\n";
      continue;
    }
    if (!Trim(l).empty()) chunk_open = false;
    if (!l.empty() && l[0] == '-') {
      line_tag.push_back(LineTag::kMinus);
      src += " " + l.substr(1) + "\n";
    } else {
      line_tag.push_back(LineTag::kContext);
      src += ContextLine(l) + "\n";
    }
  }
  ParseOptions opts;
  opts.path = "<rule " + rule.name + ">";
  opts.pattern = true;
  opts.role = [&rule](std::string_view name) {
    const MetavarDecl* m = rule.FindMetavar(name);
    return m ? RoleOf(m->kind) : PatternRole::kNone;
  };
  try {
    body.tree = ParsePattern(src, opts);
  } catch (const SyntaxError& e) {
    int line = raw.body_line + static_cast<int>(e.where().line) - 1;
    throw SmplError("in rule " + rule.name + ": " + e.what(), line);
  }
  const SyntaxTree& tree = body.tree;
  body.tags.clear();
  for (size_t i = 0; i < tree.sig_count(); ++i) {
    size_t begin = tree.sig(i).span.begin;
    size_t li = std::upper_bound(line_start.begin(), line_start.end(), begin) -
                line_start.begin() - 1;
    body.tags.push_back(line_tag[li]);
  }
  for (size_t c = 0; c < body.plus.size(); ++c) {
    size_t k = 0;
    while (k < tree.sig_count() && tree.sig(k).span.begin < chunk_offset[c])
      ++k;
    body.plus[c].before_token = k;
  }
}

void ParseScriptDecls(RawRule& raw) {
  for (auto& [line, text] : raw.decls) {
    std::string t = Trim(text);
    if (t.empty()) continue;
    size_t arrow = t.find("<<");
    if (arrow == std::string::npos) {
      if (!std::regex_match(t, std::regex(R"(\w+)"))) {
        throw SmplError("malformed script declaration '" + t + "'", line);
      }
      raw.rule.script.outputs.push_back(t);
      continue;
    }
    static const std::regex input(R"((\w+)\s*<<\s*(\w+)\s*\.\s*(\w+))");
    std::smatch m;
    if (!std::regex_match(t, m, input)) {
      throw SmplError("malformed script input '" + t + "'", line);
    }
    raw.rule.script.inputs.push_back({m[1], m[2], m[3]});
  }
}

void FinishRule(RawRule& raw, RuleSet& set) {
  while (!raw.body.empty() && Trim(raw.body.back()).empty()) {
    raw.body.pop_back();
  }
  Rule& rule = raw.rule;
  std::string body = JoinLines(raw.body);
  switch (rule.kind) {
    case Rule::Kind::kPattern:
      for (auto& [line, text] : raw.decls) {
        if (Trim(text).empty()) continue;
        for (MetavarDecl& d : smpl_internal::ParseDeclaration(text, line)) {
          if (rule.FindMetavar(d.name)) {
            throw SmplError("metavariable '" + d.name + "' declared twice",
                            line);
          }
          rule.metavars.push_back(std::move(d));
        }
      }
      BuildPattern(raw);
      break;
    case Rule::Kind::kInitializer:
      for (auto& [line, text] : raw.decls) {
        if (!Trim(text).empty()) {
          throw SmplError("initializer takes no declarations", line);
        }
      }
      smpl_internal::ParseInitializerBody(body, raw.body_line, rule.script);
      break;
    case Rule::Kind::kScript:
      ParseScriptDecls(raw);
      smpl_internal::ParseScriptAssignments(body, raw.body_line, rule.script);
      break;
  }
  set.rules.push_back(std::move(rule));
}

// Splits accumulated declaration text into ';'-terminated statements,
// remembering the line each one starts on.
std::vector<std::pair<int, std::string>> SplitDecls(
    const std::vector<std::pair<int, std::string>>& lines) {
  std::vector<std::pair<int, std::string>> out;
  std::string cur;
  int cur_line = 0;
  for (const auto& [line, text] : lines) {
    std::vector<std::string> parts = SplitTopLevel(text, ';');
    for (size_t i = 0; i < parts.size(); ++i) {
      if (Trim(cur).empty()) cur_line = line;
      cur += parts[i];
      if (i + 1 < parts.size()) {
        out.emplace_back(cur_line, cur);
        cur.clear();
      } else {
        cur += "\n";
      }
    }
  }
  if (!Trim(cur).empty()) {
    throw SmplError("declaration is missing its ';'", cur_line);
  }
  return out;
}

}  // namespace

RuleSet ParseSmpl(std::string_view text) {
  RuleSet set;
  std::vector<std::string> lines = SplitLines(text);
  enum class State { kPreamble, kDecls, kBody } state = State::kPreamble;
  RawRule raw;
  std::vector<std::pair<int, std::string>> decl_lines;
  int anon = 0;
  auto finish = [&]() {
    if (state == State::kDecls) {
      throw SmplError("rule " + raw.rule.name + " has no closing '@@'",
                      raw.rule.line);
    }
    if (state == State::kBody) FinishRule(raw, set);
  };
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    int line_no = static_cast<int>(i) + 1;
    if (state == State::kDecls) {
      std::string t = Trim(line);
      bool closes = t.size() >= 2 && t.compare(t.size() - 2, 2, "@@") == 0;
      if (closes) t = t.substr(0, t.size() - 2);
      decl_lines.emplace_back(line_no, t);
      if (closes) {
        raw.decls = SplitDecls(decl_lines);
        state = State::kBody;
        raw.body_line = line_no + 1;
      }
      continue;
    }
    if (!line.empty() && line[0] == '@') {
      finish();
      raw = RawRule();
      decl_lines.clear();
      size_t close = line.find('@', 1);
      if (close == std::string::npos) {
        throw SmplError("unterminated rule header", line_no);
      }
      ParseHeader(line.substr(1, close - 1), line_no, anon, raw.rule);
      std::string rest = Trim(std::string_view(line).substr(close + 1));
      if (rest == "@@") {
        state = State::kBody;
        raw.body_line = line_no + 1;
      } else if (rest.empty()) {
        state = State::kDecls;
      } else {
        throw SmplError("unexpected text after rule header", line_no);
      }
      continue;
    }
    if (state == State::kBody) {
      raw.body.push_back(line);
      continue;
    }
    std::string t = Trim(line);
    std::smatch m;
    if (std::regex_match(t, m, DialectLine())) {
      set.dialect_hint = m[1];
    } else if (!t.empty() && t.rfind("//", 0) != 0) {
      throw SmplError("expected a rule header", line_no);
    }
  }
  finish();
  return set;
}

namespace {

void CheckInherited(const RuleSet& set, size_t self, const std::string& from,
                    const std::string& var, int line,
                    std::vector<SmplDiagnostic>& out) {
  const Rule& rule = set.rules[self];
  int idx = set.IndexOf(from);
  if (idx < 0) {
    out.push_back({line, rule.name,
                   "unknown inherited rule '" + from + "' in " + from + "." +
                       var});
    return;
  }
  if (static_cast<size_t>(idx) >= self) {
    out.push_back({line, rule.name,
                   "dependency cycle: " + from + "." + var +
                       " is not defined before rule " + rule.name});
    return;
  }
  const Rule& src = set.rules[idx];
  bool ok = false;
  if (src.kind == Rule::Kind::kPattern) {
    ok = src.FindMetavar(var) != nullptr;
  } else if (src.kind == Rule::Kind::kScript) {
    const auto& outs = src.script.outputs;
    ok = std::find(outs.begin(), outs.end(), var) != outs.end();
  }
  if (!ok) {
    out.push_back({line, rule.name,
                   "rule " + from + " declares no metavariable '" + var +
                       "'"});
  }
}

void ValidatePattern(const RuleSet& set, size_t self,
                     std::vector<SmplDiagnostic>& out) {
  const Rule& rule = set.rules[self];
  for (const MetavarDecl& m : rule.metavars) {
    if (m.inherited()) {
      CheckInherited(set, self, m.inherited_from, m.name, m.line, out);
    }
    for (const FreshPart& p : m.fresh_template) {
      if (!p.literal && !rule.FindMetavar(p.text)) {
        out.push_back({m.line, rule.name,
                       "undeclared metavariable '" + p.text +
                           "' in fresh identifier template"});
      }
    }
  }
  const SyntaxTree& tree = rule.body.tree;
  if (tree.sig_count() == 0) {
    out.push_back({rule.line, rule.name, "pattern has no context or minus code"});
  }
  for (size_t i = 0; i + 1 < tree.sig_count(); ++i) {
    if (!tree.sig(i).Is("@")) continue;
    std::string name(tree.sig(i + 1).text);
    const MetavarDecl* m = rule.FindMetavar(name);
    if (!m || m->kind != MetaKind::kPosition) {
      out.push_back({rule.line, rule.name,
                     "undeclared position metavariable '" + name + "'"});
    }
  }
  for (const PlusChunk& chunk : rule.body.plus) {
    for (size_t k = 0; k < chunk.lines.size(); ++k) {
      for (const Token& t : Lex(chunk.lines[k])) {
        if (t.Is("...")) {
          out.push_back({chunk.line + static_cast<int>(k), rule.name,
                         "plus line contains '...'"});
          break;
        }
      }
    }
  }
}

void ValidateScript(const RuleSet& set, size_t self,
                    std::vector<SmplDiagnostic>& out) {
  const Rule& rule = set.rules[self];
  std::set<std::string> inputs;
  for (const ScriptInput& in : rule.script.inputs) {
    CheckInherited(set, self, in.rule, in.var, rule.line, out);
    inputs.insert(in.local);
  }
  std::set<std::string> tables;
  for (size_t i = 0; i < self; ++i) {
    for (const auto& [name, entries] : set.rules[i].script.tables) {
      tables.insert(name);
    }
  }
  const auto& outs = rule.script.outputs;
  for (const ScriptAssignment& a : rule.script.assignments) {
    if (std::find(outs.begin(), outs.end(), a.target) == outs.end()) {
      out.push_back({rule.line, rule.name,
                     "assignment to undeclared output '" + a.target + "'"});
    }
    for (const ScriptTerm& t : a.terms) {
      if (t.kind != ScriptTerm::Kind::kLiteral && !inputs.count(t.text)) {
        out.push_back({rule.line, rule.name,
                       "undeclared metavariable '" + t.text + "'"});
      }
      if (t.kind == ScriptTerm::Kind::kTableLookup && !tables.count(t.table)) {
        out.push_back({rule.line, rule.name,
                       "unknown table '" + t.table + "'"});
      }
    }
  }
}

}  // namespace

std::vector<SmplDiagnostic> Validate(const RuleSet& set) {
  std::vector<SmplDiagnostic> out;
  for (size_t i = 0; i < set.rules.size(); ++i) {
    const Rule& rule = set.rules[i];
    if (rule.dependency.kind != Dependency::Kind::kNone) {
      int idx = set.IndexOf(rule.dependency.rule);
      if (idx < 0) {
        out.push_back({rule.line, rule.name,
                       "depends on unknown rule '" + rule.dependency.rule +
                           "'"});
      } else if (static_cast<size_t>(idx) >= i) {
        out.push_back({rule.line, rule.name,
                       "dependency cycle through rule '" +
                           rule.dependency.rule + "'"});
      }
    }
    if (rule.kind == Rule::Kind::kPattern) {
      ValidatePattern(set, i, out);
    } else if (rule.kind == Rule::Kind::kScript) {
      ValidateScript(set, i, out);
    }
  }
  return out;
}

namespace {

std::string PrintHeader(const Rule& rule) {
  std::string h = "@";
  if (rule.kind == Rule::Kind::kInitializer) return "@initialize:python@";
  if (rule.kind == Rule::Kind::kScript) {
    return "@script:python " + rule.name + "@";
  }
  if (!rule.anonymous) h += rule.name;
  if (rule.dependency.kind != Dependency::Kind::kNone) {
    if (!rule.anonymous) h += " ";
    h += "depends on ";
    if (rule.dependency.kind == Dependency::Kind::kNotMatched) h += "!";
    h += rule.dependency.rule;
  }
  return h + "@";
}

std::string PrintDecl(const MetavarDecl& m) {
  std::string s = std::string(MetaKindName(m.kind)) + " ";
  if (m.inherited()) s += m.inherited_from + ".";
  s += m.name;
  if (m.constraint == ConstraintKind::kRegex) {
    s += " =~ " + smpl_internal::QuoteRaw(m.regex_source);
  } else if (m.constraint == ConstraintKind::kSet) {
    s += " = {";
    for (size_t i = 0; i < m.set_values.size(); ++i) {
      s += (i ? "," : "") + m.set_values[i];
    }
    s += "}";
  }
  if (!m.fresh_template.empty()) {
    s += " = ";
    for (size_t i = 0; i < m.fresh_template.size(); ++i) {
      const FreshPart& p = m.fresh_template[i];
      if (i) s += "##";
      s += p.literal ? smpl_internal::QuoteRaw(p.text) : p.text;
    }
  }
  return s + ";\n";
}

std::string PrintTerm(const ScriptTerm& t) {
  switch (t.kind) {
    case ScriptTerm::Kind::kLiteral: return smpl_internal::QuoteScript(t.text);
    case ScriptTerm::Kind::kMetavar: return t.text;
    case ScriptTerm::Kind::kTableLookup: return t.table + "[" + t.text + "]";
  }
  return "";
}

}  // namespace

std::string PrintSmpl(const RuleSet& set) {
  std::string out;
  if (!set.dialect_hint.empty()) out += "# spatch --" + set.dialect_hint + "\n";
  for (size_t r = 0; r < set.rules.size(); ++r) {
    const Rule& rule = set.rules[r];
    if (r) out += "\n";
    out += PrintHeader(rule) + "\n";
    if (rule.kind == Rule::Kind::kPattern) {
      for (const MetavarDecl& m : rule.metavars) out += PrintDecl(m);
      out += "@@\n";
      for (const std::string& l : rule.body.raw_lines) out += l + "\n";
      continue;
    }
    for (const ScriptInput& in : rule.script.inputs) {
      out += in.local + " << " + in.rule + "." + in.var + ";\n";
    }
    for (const std::string& o : rule.script.outputs) out += o + ";\n";
    out += "@@\n";
    for (const auto& [name, entries] : rule.script.tables) {
      out += name + " = {";
      bool first = true;
      for (const auto& [k, v] : entries) {
        out += first ? " " : ", ";
        first = false;
        out += smpl_internal::QuoteScript(k) + ": " +
               smpl_internal::QuoteScript(v);
      }
      out += " }\n";
    }
    for (const ScriptAssignment& a : rule.script.assignments) {
      out += "coccinelle." + a.target + " = ";
      switch (a.ctor) {
        case ScriptCtor::kMakeIdent: out += "cocci.make_ident("; break;
        case ScriptCtor::kMakeType: out += "cocci.make_type("; break;
        case ScriptCtor::kMakePragmaInfo: out += "cocci.make_pragmainfo("; break;
        case ScriptCtor::kConcat: break;
      }
      for (size_t i = 0; i < a.terms.size(); ++i) {
        if (i) out += " + ";
        out += PrintTerm(a.terms[i]);
      }
      if (a.ctor != ScriptCtor::kConcat) out += ")";
      out += ";\n";
    }
  }
  return out;
}

namespace {

bool SameDecl(const MetavarDecl& a, const MetavarDecl& b) {
  return a.name == b.name && a.inherited_from == b.inherited_from &&
         a.kind == b.kind && a.constraint == b.constraint &&
         a.regex_source == b.regex_source && a.set_values == b.set_values &&
         a.fresh_template == b.fresh_template;
}

bool SameTree(const SyntaxTree& a, const SyntaxTree& b) {
  if (a.sig_count() != b.sig_count() || a.node_count() != b.node_count()) {
    return false;
  }
  for (size_t i = 0; i < a.sig_count(); ++i) {
    if (a.sig(i).text != b.sig(i).text) return false;
  }
  for (size_t i = 0; i < a.node_count(); ++i) {
    const Node& x = a.node(static_cast<NodeId>(i));
    const Node& y = b.node(static_cast<NodeId>(i));
    if (x.kind != y.kind || x.first != y.first || x.last != y.last ||
        x.kids != y.kids || x.aux != y.aux) {
      return false;
    }
  }
  return a.root() == b.root();
}

bool SameBody(const PatternBody& a, const PatternBody& b) {
  if (!SameTree(a.tree, b.tree) || a.tags != b.tags ||
      a.plus.size() != b.plus.size()) {
    return false;
  }
  for (size_t i = 0; i < a.plus.size(); ++i) {
    if (a.plus[i].before_token != b.plus[i].before_token ||
        a.plus[i].lines != b.plus[i].lines) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool StructurallyEqual(const RuleSet& a, const RuleSet& b) {
  if (a.dialect_hint != b.dialect_hint || a.rules.size() != b.rules.size()) {
    return false;
  }
  for (size_t i = 0; i < a.rules.size(); ++i) {
    const Rule& x = a.rules[i];
    const Rule& y = b.rules[i];
    if (x.kind != y.kind || x.name != y.name || x.anonymous != y.anonymous ||
        x.dependency.kind != y.dependency.kind ||
        x.dependency.rule != y.dependency.rule ||
        x.metavars.size() != y.metavars.size()) {
      return false;
    }
    for (size_t m = 0; m < x.metavars.size(); ++m) {
      if (!SameDecl(x.metavars[m], y.metavars[m])) return false;
    }
    if (x.kind == Rule::Kind::kPattern && !SameBody(x.body, y.body)) {
      return false;
    }
    if (x.script.inputs != y.script.inputs ||
        x.script.outputs != y.script.outputs ||
        x.script.tables != y.script.tables ||
        x.script.assignments != y.script.assignments) {
      return false;
    }
  }
  return true;
}

}  // namespace spl
