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
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spl/engine.h"
#include "spl/lexer.h"
#include "spl/parser.h"

namespace spl {
namespace {

using Tables = std::map<std::string, std::map<std::string, std::string>>;

// First construct outside plain C, as (offset, description).
std::optional<std::pair<size_t, std::string>> FindExtension(
    const SyntaxTree& tree) {
  std::optional<std::pair<size_t, std::string>> best;
  auto note = [&](size_t offset, const char* what) {
    if (!best || offset < best->first) best = {offset, what};
  };
  for (NodeId id = 0; id < static_cast<NodeId>(tree.node_count()); ++id) {
    const char* what = nullptr;
    switch (tree.node(id).kind) {
      case NodeKind::kRangeFor: what = "range-based for"; break;
      case NodeKind::kChevronCall: what = "kernel launch <<<...>>>"; break;
      case NodeKind::kCommaSubscript: what = "multi-index subscript"; break;
      case NodeKind::kMacroLambda: what = "macro lambda"; break;
      default: break;
    }
    if (what) note(tree.Span(id).begin, what);
  }
  for (size_t i = 0; i < tree.sig_count(); ++i) {
    if (tree.sig(i).text.find("::") != std::string_view::npos &&
        tree.sig(i).kind != TokenKind::kLiteral &&
        tree.sig(i).kind != TokenKind::kPragmaLine &&
        tree.sig(i).kind != TokenKind::kDirectiveLine &&
        tree.sig(i).kind != TokenKind::kIncludeLine) {
      note(tree.sig(i).span.begin, "scope operator ::");
      break;
    }
  }
  return best;
}

SyntaxTree ParseChecked(const std::string& source, const RunOptions& options) {
  ParseOptions po;
  po.path = options.path;
  SyntaxTree tree = Parse(source, po);
  if (options.dialect == Dialect::kC) {
    if (auto ext = FindExtension(tree)) {
      throw SyntaxError(ext->second + " requires --dialect c-ext",
                        PositionAt(source, ext->first, options.path));
    }
  }
  return tree;
}

std::string KeyOfText(std::string_view text) {
  std::vector<std::string_view> texts;
  for (const Token& t : Lex(text)) {
    if (!t.IsTrivia()) texts.push_back(t.text);
  }
  return KeyOf(texts);
}

bool IsTypeText(std::string_view text) {
  static const std::set<std::string_view> kPunct = {
      "*", "&", "::", "<", ">", ",", "(", ")", "[", "]"};
  bool any_word = false;
  for (const Token& t : Lex(text)) {
    if (t.IsTrivia()) continue;
    if (t.kind == TokenKind::kIdentifier || t.kind == TokenKind::kKeyword) {
      any_word = true;
    } else if (t.kind == TokenKind::kLiteral && !t.text.empty() &&
               std::isdigit(static_cast<unsigned char>(t.text[0]))) {
    } else if (!(t.kind == TokenKind::kPunctuator && kPunct.count(t.text))) {
      return false;
    }
  }
  return any_word;
}

std::string EnvString(const BindingEnv& env) {
  std::string s;
  for (const auto& [k, v] : env) {
    s += k.first + '\x1f' + k.second + '\x1f' + v.key + '\x1f' + v.text;
    if (v.has_span) {
      s += '\x1f' + std::to_string(v.span.begin) + ',' +
           std::to_string(v.span.end);
    }
    s += '\x1e';
  }
  return s;
}

void Dedup(std::vector<BindingEnv>& envs) {
  std::set<std::string> seen;
  std::vector<BindingEnv> out;
  for (BindingEnv& e : envs) {
    if (seen.insert(EnvString(e)).second) out.push_back(std::move(e));
  }
  envs = std::move(out);
}

class Scheduler {
 public:
  Scheduler(const RuleSet& rules, const std::string& source,
            const RunOptions& options)
      : rules_(rules), options_(options), source_(source) {
    for (const Rule& r : rules_.rules) {
      for (const MetavarDecl& md : r.metavars) {
        if (md.inherited()) exported_.insert({md.inherited_from, md.name});
      }
      for (const ScriptInput& in : r.script.inputs) {
        exported_.insert({in.rule, in.var});
      }
    }
  }

  RunResult Run() {
    SyntaxTree tree = ParseChecked(source_, options_);
    for (size_t i = 0; i < tree.sig_count(); ++i) {
      if (tree.sig(i).kind == TokenKind::kIdentifier) {
        taken_.insert(std::string(tree.sig(i).text));
      }
    }
    envs_.push_back({});
    for (const Rule& rule : rules_.rules) {
      if (!DependencySatisfied(rule)) {
        result_.skipped.push_back(rule.name);
        result_.matched[rule.name] = false;
        result_.match_counts[rule.name] = 0;
        continue;
      }
      switch (rule.kind) {
        case Rule::Kind::kInitializer:
          for (const auto& [name, table] : rule.script.tables) {
            tables_[name] = table;
          }
          result_.matched[rule.name] = true;
          result_.match_counts[rule.name] = 0;
          break;
        case Rule::Kind::kScript:
          RunScript(rule);
          break;
        case Rule::Kind::kPattern:
          RunPattern(rule, tree);
          break;
      }
    }
    result_.output = source_;
    return std::move(result_);
  }

 private:
  bool DependencySatisfied(const Rule& rule) const {
    const Dependency& d = rule.dependency;
    if (d.kind == Dependency::Kind::kNone) return true;
    auto it = result_.matched.find(d.rule);
    bool m = it != result_.matched.end() && it->second;
    return d.kind == Dependency::Kind::kMatched ? m : !m;
  }

  std::string Where() const {
    return options_.path.empty() ? std::string() : options_.path + ": ";
  }

  void RunScript(const Rule& rule) {
    std::vector<BindingEnv> next;
    size_t evaluated = 0;
    for (const BindingEnv& env : envs_) {
      bool has_all = std::all_of(
          rule.script.inputs.begin(), rule.script.inputs.end(),
          [&](const ScriptInput& in) { return env.count({in.rule, in.var}); });
      if (!has_all) {
        next.push_back(env);
        continue;
      }
      std::string miss;
      std::optional<BindingEnv> out = Eval(rule, env, &miss);
      if (!out) {
        result_.warnings.push_back(Where() + "script rule " + rule.name +
                                   ": " + miss + "; match dropped");
        continue;
      }
      ++evaluated;
      next.push_back(std::move(*out));
    }
    Dedup(next);
    // Rules that inherit nothing still run once.
    if (next.empty()) next.push_back({});
    envs_ = std::move(next);
    result_.matched[rule.name] = evaluated > 0;
    result_.match_counts[rule.name] = evaluated;
  }

  std::optional<BindingEnv> Eval(const Rule& rule, const BindingEnv& env,
                                 std::string* miss) const {
    std::map<std::string, std::string> locals;
    for (const ScriptInput& in : rule.script.inputs) {
      locals[in.local] = env.at({in.rule, in.var}).text;
    }
    BindingEnv out = env;
    for (const ScriptAssignment& a : rule.script.assignments) {
      std::string text;
      for (const ScriptTerm& term : a.terms) {
        switch (term.kind) {
          case ScriptTerm::Kind::kLiteral:
            text += term.text;
            break;
          case ScriptTerm::Kind::kMetavar: {
            auto it = locals.find(term.text);
            if (it == locals.end()) {
              throw ScriptError("script rule " + rule.name + ": unbound name '" +
                                term.text + "'");
            }
            text += it->second;
            break;
          }
          case ScriptTerm::Kind::kTableLookup: {
            auto lit = locals.find(term.text);
            if (lit == locals.end()) {
              throw ScriptError("script rule " + rule.name + ": unbound name '" +
                                term.text + "'");
            }
            const std::map<std::string, std::string>* table = nullptr;
            if (auto t = rule.script.tables.find(term.table);
                t != rule.script.tables.end()) {
              table = &t->second;
            } else if (auto g = tables_.find(term.table); g != tables_.end()) {
              table = &g->second;
            }
            if (!table) {
              throw ScriptError("script rule " + rule.name + ": unknown table '" +
                                term.table + "'");
            }
            auto hit = table->find(lit->second);
            if (hit == table->end()) {
              *miss = "no entry for '" + lit->second + "' in table " + term.table;
              return std::nullopt;
            }
            text += hit->second;
            break;
          }
        }
      }
      BoundValue v;
      v.text = text;
      v.key = KeyOfText(text);
      switch (a.ctor) {
        case ScriptCtor::kMakeIdent:
          if (!IsIdentifierText(text)) {
            throw ScriptError("script rule " + rule.name + ": '" + text +
                              "' is not an identifier");
          }
          v.kind = MetaKind::kIdentifier;
          break;
        case ScriptCtor::kMakeType:
          if (!IsTypeText(text)) {
            throw ScriptError("script rule " + rule.name + ": '" + text +
                              "' is not a type");
          }
          v.kind = MetaKind::kType;
          break;
        case ScriptCtor::kMakePragmaInfo:
          if (text.find('\n') != std::string::npos) {
            throw ScriptError("script rule " + rule.name +
                              ": pragma text spans lines");
          }
          v.kind = MetaKind::kPragmaInfo;
          break;
        case ScriptCtor::kConcat:
          v.kind = MetaKind::kIdentifier;
          break;
      }
      locals[a.target] = text;
      out[{rule.name, a.target}] = std::move(v);
    }
    return out;
  }

  void RunPattern(const Rule& rule, SyntaxTree& tree) {
    std::vector<const MetavarDecl*> inherited;
    for (const MetavarDecl& md : rule.metavars) {
      if (md.inherited()) inherited.push_back(&md);
    }
    struct Group {
      Bindings pre;
      std::vector<size_t> envs;
      std::vector<size_t> matches;
    };
    std::vector<Group> groups;
    std::map<std::string, size_t> group_index;
    std::vector<BindingEnv> next;
    for (size_t e = 0; e < envs_.size(); ++e) {
      const BindingEnv& env = envs_[e];
      Bindings pre;
      std::string key;
      bool complete = true;
      for (const MetavarDecl* md : inherited) {
        auto it = env.find({md->inherited_from, md->name});
        if (it == env.end()) {
          complete = false;
          break;
        }
        pre[md->name] = it->second;
        key += md->name + '\x1f' + it->second.key + '\x1f' + it->second.text;
        if (it->second.kind == MetaKind::kPosition) {
          key += '\x1f' + std::to_string(it->second.has_span) + ',' +
                 std::to_string(it->second.span.begin);
        }
        key += '\x1e';
      }
      if (!complete) {
        next.push_back(env);
        continue;
      }
      auto [it, fresh] = group_index.emplace(key, groups.size());
      if (fresh) groups.push_back({std::move(pre), {}, {}});
      groups[it->second].envs.push_back(e);
    }

    MatchOptions mo;
    mo.all_sites = !HasEdits(rule);
    std::vector<MatchResult> all;
    std::vector<size_t> group_of;
    for (size_t g = 0; g < groups.size(); ++g) {
      for (MatchResult& m : MatchPattern(rule, tree, groups[g].pre, mo)) {
        group_of.push_back(g);
        all.push_back(std::move(m));
      }
    }
    for (MatchResult& m : all) {
      for (const MetavarDecl& md : rule.metavars) {
        if (md.kind != MetaKind::kFreshIdentifier || m.bindings.count(md.name)) {
          continue;
        }
        BoundValue v;
        v.kind = MetaKind::kIdentifier;
        v.text = GenerateFresh(md, m.bindings, taken_);
        v.key = v.text;
        m.bindings[md.name] = std::move(v);
      }
    }

    PlanResult plan = PlanEdits(rule, all, tree);
    for (std::string& w : plan.warnings) result_.warnings.push_back(std::move(w));
    for (size_t k : plan.kept) groups[group_of[k]].matches.push_back(k);

    for (const Group& g : groups) {
      for (size_t e : g.envs) {
        if (g.matches.empty()) {
          next.push_back(envs_[e]);
          continue;
        }
        for (size_t k : g.matches) {
          BindingEnv env = envs_[e];
          for (const auto& [name, v] : all[k].bindings) {
            if (exported_.count({rule.name, name})) env[{rule.name, name}] = v;
          }
          next.push_back(std::move(env));
        }
      }
    }
    Dedup(next);
    envs_ = std::move(next);

    result_.matched[rule.name] = !all.empty();
    std::set<std::pair<size_t, size_t>> sites;
    for (size_t k : plan.kept) sites.insert({all[k].site.begin, all[k].site.end});
    result_.match_counts[rule.name] = sites.size();
    Stage stage;
    stage.rule = rule.name;
    stage.source_before = source_;
    for (size_t k : plan.kept) stage.matches.push_back(all[k]);
    stage.script = plan.script;

    if (!plan.script.empty()) {
      std::string rewritten = Apply(plan.script, source_);
      for (BindingEnv& env : envs_) {
        for (auto& [key, v] : env) Remap(plan.script, rewritten, v);
      }
      source_ = std::move(rewritten);
      try {
        tree = ParseChecked(source_, options_);
      } catch (const SyntaxError& e) {
        throw SyntaxError("output of rule " + rule.name + " does not parse: " +
                              e.message(),
                          e.where());
      }
    }
    result_.stages.push_back(std::move(stage));
  }

  void Remap(const EditScript& script, const std::string& rewritten,
             BoundValue& v) const {
    if (!v.has_span) return;
    std::optional<ByteSpan> s = RemapSpan(script, v.span);
    if (!s) {
      v.has_span = false;
      return;
    }
    v.span = *s;
    if (v.kind == MetaKind::kPosition) {
      v.position = PositionAt(rewritten, s->begin, options_.path);
      v.text = std::to_string(v.position.line) + ":" +
               std::to_string(v.position.column);
    }
  }

  const RuleSet& rules_;
  RunOptions options_;
  std::string source_;
  std::set<EnvKey> exported_;
  std::set<std::string> taken_;
  std::vector<BindingEnv> envs_;
  Tables tables_;
  RunResult result_;
};

}  // namespace

const char* DialectName(Dialect d) { return d == Dialect::kC ? "c" : "c-ext"; }

std::optional<Dialect> ParseDialect(const std::string& text) {
  if (text == "c") return Dialect::kC;
  if (text == "c-ext") return Dialect::kCExt;
  return std::nullopt;
}

Dialect EffectiveDialect(const RuleSet& rules,
                         std::optional<Dialect> explicit_choice) {
  if (explicit_choice) return *explicit_choice;
  return rules.dialect_hint.empty() ? Dialect::kC : Dialect::kCExt;
}

std::string GenerateFresh(const MetavarDecl& decl, const Bindings& bindings,
                          std::set<std::string>& taken) {
  std::string base;
  for (const FreshPart& part : decl.fresh_template) {
    if (part.literal) {
      base += part.text;
      continue;
    }
    auto it = bindings.find(part.text);
    if (it == bindings.end()) {
      throw SubstitutionError("fresh identifier " + decl.name +
                              ": metavariable " + part.text + " is unbound");
    }
    base += it->second.text;
  }
  std::string name = base;
  for (int n = 1; taken.count(name); ++n) name = base + "_" + std::to_string(n);
  taken.insert(name);
  return name;
}

RunResult RunRules(const RuleSet& rules, const std::string& source,
                   const RunOptions& options) {
  return Scheduler(rules, source, options).Run();
}

}  // namespace spl
