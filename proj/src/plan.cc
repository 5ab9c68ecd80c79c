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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spl/lexer.h"
#include "spl/transform.h"

namespace spl {
namespace {

bool IsGroupDelimiter(std::string_view t) {
  return t == "\\(" || t == "\\|" || t == "\\&" || t == "\\)";
}

bool IsHSpace(char c) { return c == ' ' || c == '\t'; }

bool IsListKind(MetaKind k) {
  return k == MetaKind::kExpressionList || k == MetaKind::kParameterList;
}

class Lines {
 public:
  explicit Lines(const std::string& s) : s_(s) {}

  size_t Start(size_t off) const {
    size_t p = s_.rfind('\n', off == 0 ? 0 : off - 1);
    if (off == 0 || p == std::string::npos) return 0;
    return p + 1;
  }
  size_t End(size_t off) const {
    size_t p = s_.find('\n', off);
    return p == std::string::npos ? s_.size() : p;
  }
  std::string Indent(size_t off) const {
    size_t b = Start(off), e = b;
    while (e < s_.size() && IsHSpace(s_[e])) ++e;
    return s_.substr(b, e - b);
  }
  bool BlankBefore(size_t off) const {
    for (size_t i = Start(off); i < off; ++i) {
      if (!IsHSpace(s_[i])) return false;
    }
    return true;
  }
  bool BlankAfter(size_t off) const {
    for (size_t i = off; i < End(off); ++i) {
      if (!IsHSpace(s_[i]) && s_[i] != '\r') return false;
    }
    return true;
  }
  bool AllSpace(size_t b, size_t e) const {
    for (size_t i = b; i < e; ++i) {
      if (!std::isspace(static_cast<unsigned char>(s_[i]))) return false;
    }
    return true;
  }
  // Offset just past the line containing `off`.
  size_t NextLine(size_t off) const {
    size_t e = End(off);
    return e < s_.size() ? e + 1 : e;
  }

 private:
  const std::string& s_;
};

struct Deletion {
  ByteSpan span;
  size_t run_begin = 0;
  bool whole_line = false;
};

struct Insertion {
  size_t offset = 0;
  std::string text;
  size_t order = 0;
};

// The disjunction branches enclosing each plus chunk, for deciding whether
// the chunk belongs to the alternative that matched.
std::vector<std::vector<std::pair<NodeId, int>>> ChunkBranches(
    const PatternBody& body) {
  const SyntaxTree& pt = body.tree;
  std::vector<std::vector<std::pair<NodeId, int>>> out(body.plus.size());
  if (pt.root() == kNoNode) return out;
  for (size_t c = 0; c < body.plus.size(); ++c) {
    size_t t = body.plus[c].before_token;
    size_t pos = t;
    if (t > 0 && !IsGroupDelimiter(pt.sig(t - 1).text)) pos = t - 1;
    for (NodeId id : pt.Preorder(pt.root())) {
      const Node& n = pt.node(id);
      if (n.kind != NodeKind::kDisj) continue;
      for (size_t b = 0; b < n.kids.size(); ++b) {
        const Node& br = pt.node(n.kids[b]);
        if (br.first <= pos && pos < br.last) {
          out[c].emplace_back(id, static_cast<int>(b));
        }
      }
    }
  }
  return out;
}

class Planner {
 public:
  Planner(const Rule& rule, const SyntaxTree& tree)
      : rule_(rule),
        body_(rule.body),
        pt_(rule.body.tree),
        tree_(tree),
        src_(tree.source()),
        lines_(tree.source()),
        branches_(ChunkBranches(rule.body)) {}

  // Edits for one match, before conflict resolution against other matches.
  std::vector<Edit> PlanMatch(const MatchResult& m) {
    std::vector<Deletion> dels;
    std::vector<Insertion> ins;
    PlanView(m, m.token_map, 0, pt_.sig_count(), dels, ins);
    for (const ExtraOccurrence& e : m.extra) {
      std::vector<ByteSpan> view(pt_.sig_count(), {kUnmapped, kUnmapped});
      std::copy(e.spans.begin(), e.spans.end(), view.begin() + e.first_token);
      PlanView(m, view, e.first_token, e.last_token, dels, ins);
    }
    // Deletions nested in others go; insertions strictly inside a deletion
    // go too.
    std::sort(dels.begin(), dels.end(), [](const Deletion& a, const Deletion& b) {
      return a.span.begin != b.span.begin ? a.span.begin < b.span.begin
                                          : a.span.end > b.span.end;
    });
    std::vector<Deletion> outer;
    for (const Deletion& d : dels) {
      if (!outer.empty() && d.span.end <= outer.back().span.end &&
          d.span.begin >= outer.back().span.begin) {
        continue;
      }
      outer.push_back(d);
    }
    std::vector<Edit> edits;
    for (const Insertion& i : ins) {
      bool inside = false;
      for (const Deletion& d : outer) {
        if (d.span.begin < i.offset && i.offset < d.span.end) inside = true;
      }
      if (!inside) {
        edits.push_back({{i.offset, i.offset}, i.text, rule_.name, i.order});
      }
    }
    for (Deletion& d : outer) {
      if (!d.whole_line) AbsorbSpace(d, edits);
      edits.push_back({d.span, "", rule_.name, 0});
    }
    return edits;
  }

 private:
  void PlanView(const MatchResult& m, const std::vector<ByteSpan>& map,
                size_t first, size_t last, std::vector<Deletion>& dels,
                std::vector<Insertion>& ins) {
    auto mapped = [&](size_t i) { return map[i].begin != kUnmapped; };
    std::vector<bool> active(body_.plus.size());
    std::vector<bool> chunk_at(pt_.sig_count() + 1, false);
    for (size_t c = 0; c < body_.plus.size(); ++c) {
      bool on = true;
      for (auto [disj, branch] : branches_[c]) {
        auto it = m.choices.find(disj);
        if (it == m.choices.end() || it->second != branch) on = false;
      }
      size_t t = body_.plus[c].before_token;
      if (first != 0 || last != pt_.sig_count()) {
        on = on && t > first && t <= last;
      }
      active[c] = on;
      if (on) chunk_at[t] = true;
    }

    // Minus runs.
    std::vector<Deletion> local;
    bool open = false;
    for (size_t i = first; i < last; ++i) {
      if (chunk_at[i]) open = false;
      if (IsGroupDelimiter(pt_.sig(i).text) || !mapped(i)) continue;
      if (body_.tags[i] != LineTag::kMinus) {
        open = false;
        continue;
      }
      if (!open) {
        local.push_back({map[i], map[i].begin, false});
        open = true;
      } else {
        ByteSpan& s = local.back().span;
        s.begin = std::min(s.begin, map[i].begin);
        s.end = std::max(s.end, map[i].end);
      }
    }
    std::sort(local.begin(), local.end(), [](const Deletion& a, const Deletion& b) {
      return a.span.begin < b.span.begin;
    });
    std::vector<Deletion> merged;
    for (Deletion& d : local) {
      d.run_begin = d.span.begin;
      if (!merged.empty() && (d.span.begin <= merged.back().span.end ||
                              lines_.AllSpace(merged.back().span.end,
                                              d.span.begin))) {
        merged.back().span.end = std::max(merged.back().span.end, d.span.end);
        continue;
      }
      merged.push_back(d);
    }
    for (Deletion& d : merged) ExtendLines(d);

    auto containing = [&](ByteSpan s) -> const Deletion* {
      for (const Deletion& d : merged) {
        if (d.span.begin <= s.begin && s.end <= d.span.end) return &d;
      }
      return nullptr;
    };

    for (size_t c = 0; c < body_.plus.size(); ++c) {
      if (!active[c]) continue;
      const PlusChunk& chunk = body_.plus[c];
      size_t t = chunk.before_token;
      std::optional<size_t> after, before;
      for (size_t j = t; j-- > first;) {
        std::string_view text = pt_.sig(j).text;
        if (IsGroupDelimiter(text) || !mapped(j)) continue;
        if (text == "...") break;
        after = j;
        break;
      }
      if (!after) {
        for (size_t j = t; j < last; ++j) {
          if (IsGroupDelimiter(pt_.sig(j).text) || !mapped(j)) continue;
          before = j;
          break;
        }
      }
      if (!after && !before) continue;
      size_t j = after ? *after : *before;
      std::string_view ptext = pt_.sig(j).text;
      bool minus = body_.tags[j] == LineTag::kMinus;
      size_t offset = 0;
      bool whole = false;
      std::string indent;
      if (minus) {
        const Deletion* d = containing(map[j]);
        if (!d) continue;
        offset = after ? d->span.end : d->span.begin;
        whole = d->whole_line;
        indent = lines_.Indent(d->run_begin);
      } else if (after) {
        offset = map[j].end;
        if (lines_.BlankAfter(offset)) {
          whole = true;
          size_t brace = offset;
          offset = lines_.NextLine(offset);
          if (ptext == "{") {
            std::optional<size_t> next = NextToken(offset);
            if (!next || tree_.sig(*next).Is("}")) {
              indent = lines_.Indent(brace) + "  ";
            } else {
              indent = lines_.Indent(tree_.sig(*next).span.begin);
            }
          } else {
            indent = lines_.Indent(brace);
          }
        }
      } else {
        offset = map[j].begin;
        if (lines_.BlankBefore(offset)) {
          whole = true;
          size_t at = offset;
          offset = lines_.Start(offset);
          if (ptext == "}") {
            std::optional<size_t> open = MatchingOpen(at);
            if (!open) {
              indent = lines_.Indent(at);
            } else if (tree_.sig(*open + 1).span.begin >= at) {
              indent = lines_.Indent(tree_.sig(*open).span.begin) + "  ";
            } else {
              indent = lines_.Indent(tree_.sig(*open + 1).span.begin);
            }
          } else {
            indent = lines_.Indent(at);
          }
        }
      }
      std::vector<std::string> rendered = Render(chunk, m.bindings);
      std::string text;
      if (whole) {
        if (offset == src_.size() && !src_.empty() && src_.back() != '\n') {
          text += "\n";
        }
        for (size_t k = 0; k < rendered.size(); ++k) {
          if (rendered[k].empty()) {
            text += "\n";
          } else {
            text += (RawIsDirective(chunk.lines[k]) ? indent : indent + Relative(chunk, k)) +
                    rendered[k] + "\n";
          }
        }
      } else {
        for (const std::string& r : rendered) {
          std::string t = Trim(r);
          if (t.empty()) continue;
          if (!text.empty()) text += " ";
          text += t;
        }
      }
      ins.push_back({offset, text, ++order_});
    }
    for (Deletion& d : merged) dels.push_back(d);
  }

  static std::string Trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  }

  static bool RawIsDirective(const std::string& line) {
    size_t i = 0;
    while (i < line.size() && IsHSpace(line[i])) ++i;
    return i < line.size() && line[i] == '#';
  }

  static size_t LeadingSpace(const std::string& line) {
    size_t i = 0;
    while (i < line.size() && IsHSpace(line[i])) ++i;
    return i;
  }

  // Whitespace a plus line keeps relative to the least indented code line
  // of its chunk.
  static std::string Relative(const PlusChunk& chunk, size_t k) {
    size_t min = std::string::npos;
    for (const std::string& l : chunk.lines) {
      if (Trim(l).empty() || RawIsDirective(l)) continue;
      min = std::min(min, LeadingSpace(l));
    }
    size_t lead = LeadingSpace(chunk.lines[k]);
    if (min == std::string::npos || lead <= min) return "";
    return chunk.lines[k].substr(min, lead - min);
  }

  void ExtendLines(Deletion& d) {
    if (!lines_.BlankBefore(d.span.begin) || !lines_.BlankAfter(d.span.end)) {
      return;
    }
    d.whole_line = true;
    d.span.begin = lines_.Start(d.span.begin);
    d.span.end = lines_.NextLine(d.span.end);
    for (NodeId id : tree_.node(tree_.root()).kids) {
      if (tree_.node(id).kind != NodeKind::kFunctionDef) continue;
      ByteSpan f = tree_.Span(id);
      if (d.span.begin <= f.begin && f.end <= d.span.end &&
          d.span.end < src_.size() &&
          lines_.BlankAfter(d.span.end) &&
          lines_.End(d.span.end) < src_.size()) {
        d.span.end = lines_.NextLine(d.span.end);
        break;
      }
    }
  }

  void AbsorbSpace(Deletion& d, const std::vector<Edit>& edits) {
    for (const Edit& e : edits) {
      if (e.span.begin == d.span.begin || e.span.begin == d.span.end) return;
    }
    bool left = d.span.begin == lines_.Start(d.span.begin) ||
                IsHSpace(src_[d.span.begin - 1]);
    if (!left) return;
    size_t e = d.span.end;
    while (e < src_.size() && IsHSpace(src_[e])) ++e;
    d.span.end = e;
  }

  std::optional<size_t> NextToken(size_t offset) const {
    size_t lo = 0, hi = tree_.sig_count();
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      if (tree_.sig(mid).span.begin >= offset) hi = mid; else lo = mid + 1;
    }
    if (lo == tree_.sig_count()) return std::nullopt;
    return lo;
  }

  // The `{` closed by the `}` starting at `offset`.
  std::optional<size_t> MatchingOpen(size_t offset) const {
    std::optional<size_t> close = NextToken(offset);
    if (!close) return std::nullopt;
    int depth = 0;
    for (size_t i = *close + 1; i-- > 0;) {
      if (tree_.sig(i).Is("}")) ++depth;
      if (tree_.sig(i).Is("{") && --depth == 0) return i;
    }
    return std::nullopt;
  }

  std::optional<size_t> PrevToken(size_t offset) const {
    size_t lo = 0, hi = tree_.sig_count();
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      if (tree_.sig(mid).span.end <= offset) lo = mid + 1; else hi = mid;
    }
    if (lo == 0) return std::nullopt;
    return lo - 1;
  }

  const BoundValue& Lookup(const std::string& name, const Bindings& b,
                           int line) const {
    auto it = b.find(name);
    if (it == b.end()) {
      throw SubstitutionError("rule " + rule_.name + ", line " +
                              std::to_string(line) +
                              ": plus code uses unbound metavariable '" +
                              name + "'");
    }
    return it->second;
  }

  std::string SubstitutePragma(std::string_view text, const Bindings& b,
                               int line) const {
    std::string out;
    size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t s = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                   text[i] == '_'))
          ++i;
        std::string word(text.substr(s, i - s));
        const MetavarDecl* m = rule_.FindMetavar(word);
        if (m && m->kind == MetaKind::kPragmaInfo) {
          out += Lookup(word, b, line).text;
        } else {
          out += word;
        }
        continue;
      }
      out += c;
      ++i;
    }
    return out;
  }

  std::vector<std::string> Render(const PlusChunk& chunk, const Bindings& b) {
    std::vector<std::string> out;
    for (size_t k = 0; k < chunk.lines.size(); ++k) {
      int line = chunk.line + static_cast<int>(k);
      std::string raw = chunk.lines[k];
      raw.erase(0, LeadingSpace(raw));
      std::vector<Token> toks = Lex(raw);
      std::string r;
      bool skip_space = false;
      bool skip_comma = false;
      for (const Token& t : toks) {
        if (t.kind == TokenKind::kWhitespace && skip_space) {
          std::string_view rest = t.text;
          while (!rest.empty() && IsHSpace(rest.front())) rest.remove_prefix(1);
          r += rest;
          skip_space = false;
          continue;
        }
        skip_space = false;
        if (skip_comma && t.kind != TokenKind::kWhitespace) {
          skip_comma = false;
          if (t.Is(",")) {
            skip_space = true;
            continue;
          }
        }
        if (t.kind == TokenKind::kPragmaLine) {
          r += SubstitutePragma(t.text, b, line);
          continue;
        }
        const MetavarDecl* m =
            t.kind == TokenKind::kIdentifier ? rule_.FindMetavar(t.text)
                                             : nullptr;
        if (!m || m->kind == MetaKind::kSymbol) {
          r += t.text;
          continue;
        }
        const BoundValue& v = Lookup(m->name, b, line);
        if (v.text.empty() && IsListKind(v.kind)) {
          size_t e = r.size();
          while (e > 0 && IsHSpace(r[e - 1])) --e;
          if (e > 0 && r[e - 1] == ',') {
            r.erase(e - 1);
            while (!r.empty() && IsHSpace(r.back())) r.pop_back();
          } else {
            skip_comma = true;
          }
          continue;
        }
        if (!v.text.empty() && v.text.front() == '\n') {
          while (!r.empty() && IsHSpace(r.back())) r.pop_back();
        }
        r += v.text;
        if (!v.text.empty() && v.text.back() == '\n') skip_space = true;
      }
      while (!r.empty() && (IsHSpace(r.back()) || r.back() == '\r')) r.pop_back();
      out.push_back(r);
    }
    return out;
  }

  const Rule& rule_;
  const PatternBody& body_;
  const SyntaxTree& pt_;
  const SyntaxTree& tree_;
  const std::string& src_;
  Lines lines_;
  std::vector<std::vector<std::pair<NodeId, int>>> branches_;
  size_t order_ = 0;
};

bool Overlaps(const Edit& a, const Edit& b) {
  bool a_ins = a.span.begin == a.span.end;
  bool b_ins = b.span.begin == b.span.end;
  if (a_ins && b_ins) return false;
  if (a_ins) return b.span.begin < a.span.begin && a.span.begin < b.span.end;
  if (b_ins) return a.span.begin < b.span.begin && b.span.begin < a.span.end;
  return a.span.begin < b.span.end && b.span.begin < a.span.end;
}

}  // namespace

PlanResult PlanEdits(const Rule& rule, const std::vector<MatchResult>& matches,
                     const SyntaxTree& tree) {
  PlanResult result;
  Planner planner(rule, tree);
  std::vector<Edit> accepted;
  size_t seq = 0;
  for (size_t mi = 0; mi < matches.size(); ++mi) {
    std::vector<Edit> edits = planner.PlanMatch(matches[mi]);
    std::sort(edits.begin(), edits.end(), [](const Edit& a, const Edit& b) {
      if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
      if (a.span.end != b.span.end) return a.span.end < b.span.end;
      return a.seq < b.seq;
    });
    std::vector<Edit> fresh;
    bool conflict = false;
    for (const Edit& e : edits) {
      bool duplicate = false;
      for (const Edit& a : accepted) {
        if (a.span.begin == e.span.begin && a.span.end == e.span.end &&
            a.replacement == e.replacement) {
          duplicate = true;
        } else if (Overlaps(a, e)) {
          conflict = true;
        }
      }
      if (!duplicate) fresh.push_back(e);
    }
    if (conflict) {
      SourcePosition at = PositionAt(tree.source(), matches[mi].site.begin,
                                     tree.path);
      result.warnings.push_back(
          (at.file.empty() ? std::string() : at.file + ":") +
          std::to_string(at.line) + ":" + std::to_string(at.column) +
          ": rule " + rule.name +
          ": match overlaps an earlier match; its edits are dropped");
      continue;
    }
    for (Edit& e : fresh) {
      e.seq = seq++;
      accepted.push_back(std::move(e));
    }
    result.kept.push_back(mi);
  }
  std::sort(accepted.begin(), accepted.end(), [](const Edit& a, const Edit& b) {
    if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
    if (a.span.end != b.span.end) return a.span.end < b.span.end;
    return a.seq < b.seq;
  });
  result.script.edits = std::move(accepted);
  return result;
}

}  // namespace spl
