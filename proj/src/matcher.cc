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
#include <functional>
#include <regex>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "spl/match.h"

namespace spl {

std::string KeyOf(const std::vector<std::string_view>& texts) {
  std::string key;
  for (size_t i = 0; i < texts.size(); ++i) {
    if (i) key += ' ';
    key += texts[i];
  }
  return key;
}

bool HasEdits(const Rule& rule) {
  if (!rule.body.plus.empty()) return true;
  return std::find(rule.body.tags.begin(), rule.body.tags.end(),
                   LineTag::kMinus) != rule.body.tags.end();
}

namespace {

bool IsStatementKind(NodeKind k) {
  switch (k) {
    case NodeKind::kCompound:
    case NodeKind::kExprStmt:
    case NodeKind::kEmptyStmt:
    case NodeKind::kFor:
    case NodeKind::kRangeFor:
    case NodeKind::kIf:
    case NodeKind::kWhile:
    case NodeKind::kDoWhile:
    case NodeKind::kReturn:
    case NodeKind::kBreak:
    case NodeKind::kContinue:
      return true;
    default:
      return false;
  }
}

// Leading kids matched one to one before the list part starts, or -1 when
// the kind has no list part.
int FixedKids(NodeKind k) {
  switch (k) {
    case NodeKind::kTranslationUnit:
    case NodeKind::kCompound:
    case NodeKind::kParamList:
    case NodeKind::kAttribute:
    case NodeKind::kInitList:
      return 0;
    case NodeKind::kCall:
    case NodeKind::kCommaSubscript:
      return 1;
    case NodeKind::kChevronCall:
      return 5;
    default:
      return -1;
  }
}

bool IsItemList(NodeKind k) {
  return k == NodeKind::kTranslationUnit || k == NodeKind::kCompound;
}

const ByteSpan kNoSpan{kUnmapped, kUnmapped};

class Matcher {
 public:
  using K = std::function<bool()>;
  using Done = std::function<bool(size_t)>;

  Matcher(const Rule& rule, const SyntaxTree& prog, const Bindings& inherited,
          const MatchOptions& options)
      : rule_(rule),
        pt_(rule.body.tree),
        g_(prog),
        options_(options),
        parent_(prog.node_count(), kNoNode) {
    for (size_t i = 0; i < g_.node_count(); ++i) {
      for (NodeId k : g_.node(static_cast<NodeId>(i)).kids) {
        if (k != kNoNode) parent_[k] = static_cast<NodeId>(i);
      }
    }
    bind_ = inherited;
    map_.assign(pt_.sig_count(), kNoSpan);
  }

  std::vector<MatchResult> Run() {
    if (pt_.root() == kNoNode || g_.root() == kNoNode) return {};
    const Node& root = pt_.node(pt_.root());
    if (root.kind == NodeKind::kExprPattern) {
      WalkExpressions(g_.root(), root.kids[0]);
    } else {
      SearchSequence(g_.node(g_.root()).kids, g_.root(), root.kids);
    }
    return std::move(results_);
  }

 private:
  struct ListCtx {
    bool open_end = false;
    // Compound interior, for statement lists covering a whole block.
    bool has_interior = false;
    ByteSpan interior;
  };

  struct Mark {
    size_t map, bind, extra, choice;
  };

  // ---- trail ------------------------------------------------------------

  Mark Save() const {
    return {map_trail_.size(), bind_trail_.size(), extra_.size(),
            choice_trail_.size()};
  }

  void Restore(const Mark& m) {
    while (map_trail_.size() > m.map) {
      map_[map_trail_.back().first] = map_trail_.back().second;
      map_trail_.pop_back();
    }
    while (bind_trail_.size() > m.bind) {
      bind_.erase(bind_trail_.back());
      bind_trail_.pop_back();
    }
    extra_.resize(m.extra);
    while (choice_trail_.size() > m.choice) {
      auto& [node, had, old] = choice_trail_.back();
      if (had) {
        choices_[node] = old;
      } else {
        choices_.erase(node);
      }
      choice_trail_.pop_back();
    }
  }

  void MapToken(size_t pattern_token, ByteSpan span) {
    map_trail_.emplace_back(pattern_token, map_[pattern_token]);
    map_[pattern_token] = span;
  }

  void Choose(NodeId disj, int branch) {
    auto it = choices_.find(disj);
    choice_trail_.emplace_back(disj, it != choices_.end(),
                               it != choices_.end() ? it->second : 0);
    choices_[disj] = branch;
  }

  bool Bind(const std::string& name, const BoundValue& v) {
    auto it = bind_.find(name);
    if (it == bind_.end()) {
      bind_.emplace(name, v);
      bind_trail_.push_back(name);
      return true;
    }
    const BoundValue& old = it->second;
    if (old.kind == MetaKind::kPosition || v.kind == MetaKind::kPosition) {
      return old.has_span && v.has_span && old.span.begin == v.span.begin &&
             old.span.end == v.span.end;
    }
    return old.key == v.key;
  }

  // ---- helpers ----------------------------------------------------------

  std::string_view PText(size_t i) const { return pt_.sig(i).text; }

  const MetavarDecl* Meta(std::string_view name) const {
    return rule_.FindMetavar(name);
  }

  // The metavariable a single-token pattern node names, if any.
  const MetavarDecl* NodeMeta(NodeId p) const {
    const Node& n = pt_.node(p);
    size_t len = n.last - n.first;
    if (n.position_token >= 0) len -= 2;
    if (len != 1) return nullptr;
    if (pt_.sig(n.first).kind != TokenKind::kIdentifier) return nullptr;
    return Meta(PText(n.first));
  }

  BoundValue NodeValue(MetaKind kind, NodeId g) const {
    BoundValue v;
    v.kind = kind;
    v.text = std::string(g_.Text(g));
    v.key = KeyOf(g_.TokenTexts(g));
    v.has_span = true;
    v.span = g_.Span(g);
    return v;
  }

  std::vector<uint32_t> OwnPatternTokens(NodeId p) const {
    const Node& n = pt_.node(p);
    std::vector<uint32_t> own = pt_.OwnTokens(p);
    if (n.position_token >= 0) {
      uint32_t a = static_cast<uint32_t>(n.position_token);
      own.erase(std::remove_if(own.begin(), own.end(),
                               [a](uint32_t t) { return t == a || t + 1 == a; }),
                own.end());
    }
    return own;
  }

  bool IsFunctionNamePosition(NodeId g) const {
    NodeId par = parent_[g];
    if (par == kNoNode) return false;
    const Node& pn = g_.node(par);
    size_t n = pn.kids.size();
    switch (pn.kind) {
      case NodeKind::kFunctionDef:
        return n >= 3 && pn.kids[n - 3] == g;
      case NodeKind::kFunctionDecl:
        return n >= 2 && pn.kids[n - 2] == g;
      case NodeKind::kCall:
      case NodeKind::kChevronCall:
        return pn.kids[0] == g;
      default:
        return false;
    }
  }

  bool IsExprBranch(NodeId p) const {
    const Node& n = pt_.node(p);
    if (n.kind == NodeKind::kDisj || n.kind == NodeKind::kConj) {
      for (NodeId b : n.kids) {
        if (!IsExprBranch(b)) return false;
      }
      return true;
    }
    return IsExpressionKind(n.kind);
  }

  bool AttachPosition(NodeId p, NodeId g) {
    const Node& n = pt_.node(p);
    if (n.position_token < 0) return true;
    size_t name_tok = static_cast<size_t>(n.position_token);
    BoundValue v;
    v.kind = MetaKind::kPosition;
    v.has_span = true;
    v.span = g_.Span(g);
    v.position = PositionAt(g_.source(), v.span.begin, g_.path);
    v.text = std::to_string(v.position.line) + ":" +
             std::to_string(v.position.column);
    v.key = v.text;
    if (!Bind(std::string(PText(name_tok)), v)) return false;
    MapToken(name_tok - 1, v.span);
    MapToken(name_tok, v.span);
    return true;
  }

  // ---- node matching ----------------------------------------------------

  bool M(NodeId p, NodeId g, const K& k) {
    if (p == kNoNode) return g == kNoNode && k();
    Mark mark = Save();
    if (MatchNode(p, g, k)) return true;
    Restore(mark);
    return false;
  }

  bool MatchNode(NodeId p, NodeId g, const K& k) {
    const Node& pn = pt_.node(p);
    switch (pn.kind) {
      case NodeKind::kDots:
        if (g != kNoNode) MapToken(pn.first, g_.Span(g));
        return k();
      case NodeKind::kExprPattern:
        return M(pn.kids[0], g, k);
      case NodeKind::kDisj:
        for (size_t i = 0; i < pn.kids.size(); ++i) {
          Mark mark = Save();
          Choose(p, static_cast<int>(i));
          if (M(pn.kids[i], g, k)) return true;
          Restore(mark);
        }
        return false;
      case NodeKind::kConj:
        if (g == kNoNode) return false;
        return Conj(p, 0, g, k);
      case NodeKind::kSeq:
        return false;
      default:
        break;
    }
    if (g == kNoNode) return false;
    const Node& gn = g_.node(g);
    if (const MetavarDecl* meta = NodeMeta(p)) {
      if (pn.kind == NodeKind::kMetaStmt || pn.kind == NodeKind::kIdentifier ||
          pn.kind == NodeKind::kType) {
        return MatchMeta(p, *meta, g, k);
      }
    }
    if (pn.kind == NodeKind::kMetaStmt) return false;
    if (pn.kind != gn.kind) return false;
    if (!AttachPosition(p, g)) return false;
    switch (pn.kind) {
      case NodeKind::kPragma:
        return MatchPragma(p, g) && k();
      case NodeKind::kInclude:
      case NodeKind::kDirective:
        if (NormalizeDirective(pt_.sig(pn.first).text) !=
            NormalizeDirective(g_.sig(gn.first).text)) {
          return false;
        }
        MapToken(pn.first, g_.Span(g));
        return k();
      default:
        break;
    }
    int fixed = FixedKids(pn.kind);
    if (!MatchOwnTokens(p, g, fixed >= 0)) return false;
    if (pn.kind == NodeKind::kFor) return MatchFor(p, g, k);
    if (fixed < 0) {
      if (pn.kids.size() != gn.kids.size()) return false;
      return MatchKids(pn.kids, gn.kids, 0, pn.kids.size(), k);
    }
    size_t f = static_cast<size_t>(fixed);
    if (pn.kids.size() < f || gn.kids.size() < f) return false;
    std::vector<NodeId> plist(pn.kids.begin() + f, pn.kids.end());
    std::vector<NodeId> glist(gn.kids.begin() + f, gn.kids.end());
    ListCtx ctx;
    if (gn.kind == NodeKind::kCompound && gn.last - gn.first >= 2) {
      ctx.has_interior = true;
      ctx.interior = {g_.sig(gn.first).span.end,
                      g_.sig(gn.last - 1).span.begin};
    }
    return MatchKids(pn.kids, gn.kids, 0, f, [&, plist, glist, ctx]() {
      return MatchList(plist, 0, glist, 0, ctx, IsItemList(pn.kind),
                       [&](size_t) { return k(); });
    });
  }

  bool MatchOwnTokens(NodeId p, NodeId g, bool drop_commas) {
    std::vector<uint32_t> po = OwnPatternTokens(p);
    std::vector<uint32_t> go = g_.OwnTokens(g);
    if (drop_commas) {
      auto comma_p = [&](uint32_t t) { return pt_.sig(t).Is(","); };
      auto comma_g = [&](uint32_t t) { return g_.sig(t).Is(","); };
      po.erase(std::remove_if(po.begin(), po.end(), comma_p), po.end());
      go.erase(std::remove_if(go.begin(), go.end(), comma_g), go.end());
    }
    if (po.size() != go.size()) return false;
    for (size_t i = 0; i < po.size(); ++i) {
      if (pt_.sig(po[i]).text != g_.sig(go[i]).text) return false;
    }
    for (size_t i = 0; i < po.size(); ++i) MapToken(po[i], g_.sig(go[i]).span);
    return true;
  }

  bool MatchKids(const std::vector<NodeId>& pk, const std::vector<NodeId>& gk,
                 size_t i, size_t end, const K& k) {
    if (i == end) return k();
    return M(pk[i], gk[i], [&]() { return MatchKids(pk, gk, i + 1, end, k); });
  }

  bool MatchFor(NodeId p, NodeId g, const K& k) {
    const Node& pn = pt_.node(p);
    const Node& gn = g_.node(g);
    if (pn.kids.size() != 4 || gn.kids.size() != 4) return false;
    NodeId pinit = pn.kids[0];
    const Node& pi = pt_.node(pinit);
    bool any_init = pi.kind == NodeKind::kExprStmt && pi.kids.size() == 1 &&
                    pt_.node(pi.kids[0]).kind == NodeKind::kDots;
    auto rest = [&]() { return MatchKids(pn.kids, gn.kids, 1, 4, k); };
    if (!any_init) return M(pinit, gn.kids[0], rest);
    const Node& gi = g_.node(gn.kids[0]);
    if (gi.last - gi.first >= 2) {
      MapToken(pi.first, {g_.sig(gi.first).span.begin,
                          g_.sig(gi.last - 2).span.end});
    }
    MapToken(pi.last - 1, g_.sig(gi.last - 1).span);
    return rest();
  }

  bool MatchPragma(NodeId p, NodeId g) {
    std::string ptail = PragmaTail(pt_.sig(pt_.node(p).first).text);
    std::string gtail = PragmaTail(g_.sig(g_.node(g).first).text);
    size_t sp = ptail.rfind(' ');
    std::string last = sp == std::string::npos ? ptail : ptail.substr(sp + 1);
    std::string prefix = sp == std::string::npos ? "" : ptail.substr(0, sp);
    const MetavarDecl* info = Meta(last);
    bool ok = false;
    if (last == "...") {
      ok = gtail == prefix || gtail.rfind(prefix + " ", 0) == 0 ||
           prefix.empty();
    } else if (info && info->kind == MetaKind::kPragmaInfo) {
      std::string head = prefix.empty() ? "" : prefix + " ";
      if (gtail.size() > head.size() && gtail.rfind(head, 0) == 0) {
        BoundValue v;
        v.kind = MetaKind::kPragmaInfo;
        v.text = gtail.substr(head.size());
        v.key = v.text;
        ok = Bind(last, v);
      }
    } else {
      ok = gtail == ptail;
    }
    if (ok) MapToken(pt_.node(p).first, g_.Span(g));
    return ok;
  }

  bool MatchMeta(NodeId p, const MetavarDecl& meta, NodeId g, const K& k) {
    const Node& gn = g_.node(g);
    const std::string& name = meta.name;
    switch (meta.kind) {
      case MetaKind::kIdentifier:
      case MetaKind::kFunction:
      case MetaKind::kFreshIdentifier:
        if (gn.kind != NodeKind::kIdentifier) return false;
        if (meta.kind == MetaKind::kFunction && !IsFunctionNamePosition(g)) {
          return false;
        }
        break;
      case MetaKind::kSymbol:
        if (gn.kind != NodeKind::kIdentifier || g_.Text(g) != name) {
          return false;
        }
        break;
      case MetaKind::kExpression:
        if (!IsExpressionKind(gn.kind)) return false;
        break;
      case MetaKind::kConstant:
        if (gn.kind != NodeKind::kLiteral) return false;
        break;
      case MetaKind::kType:
        if (gn.kind != NodeKind::kType) return false;
        break;
      case MetaKind::kStatement:
      case MetaKind::kStatementList:
        if (!IsStatementKind(gn.kind)) return false;
        break;
      case MetaKind::kExpressionList:
        if (!IsExpressionKind(gn.kind)) return false;
        break;
      case MetaKind::kParameterList:
        if (gn.kind != NodeKind::kParam) return false;
        break;
      default:
        return false;
    }
    BoundValue v = NodeValue(meta.kind, g);
    if (meta.constraint == ConstraintKind::kRegex &&
        !std::regex_search(v.text, *meta.regex)) {
      return false;
    }
    if (meta.constraint == ConstraintKind::kSet &&
        std::find(meta.set_values.begin(), meta.set_values.end(), v.key) ==
            meta.set_values.end()) {
      return false;
    }
    if (meta.kind != MetaKind::kSymbol && !Bind(name, v)) return false;
    if (!AttachPosition(p, g)) return false;
    MapToken(pt_.node(p).first, v.span);
    return k();
  }

  // ---- conjunction ------------------------------------------------------

  bool Conj(NodeId p, size_t bi, NodeId g, const K& k) {
    const Node& pn = pt_.node(p);
    if (bi == pn.kids.size()) return k();
    NodeId b = pn.kids[bi];
    auto next = [&, bi]() { return Conj(p, bi + 1, g, k); };
    NodeKind gk = g_.node(g).kind;
    bool containment = IsExprBranch(b) && !IsExpressionKind(gk);
    if (!containment) return M(b, g, next);
    for (NodeId n : g_.Preorder(g)) {
      if (!IsExpressionKind(g_.node(n).kind)) continue;
      Mark mark = Save();
      if (M(b, n, [&, n]() {
            CollectExtras(b, n, g);
            return next();
          })) {
        return true;
      }
      Restore(mark);
    }
    return false;
  }

  // Other occurrences of containment branch `b` inside statement `g`, given
  // the bindings from the first occurrence `first`.
  void CollectExtras(NodeId b, NodeId first, NodeId g) {
    const Node& bn = pt_.node(b);
    ByteSpan fs = g_.Span(first);
    std::vector<ByteSpan> taken{fs};
    std::vector<NodeId> order = g_.Preorder(g);
    std::vector<ExtraOccurrence> found;
    for (NodeId n : order) {
      if (n == first || !IsExpressionKind(g_.node(n).kind)) continue;
      ByteSpan s = g_.Span(n);
      bool overlaps = false;
      for (const ByteSpan& t : taken) {
        if (s.begin < t.end && t.begin < s.end) overlaps = true;
        if (s.begin <= t.begin && t.end <= s.end) overlaps = true;
      }
      if (overlaps) continue;
      Mark mark = Save();
      ExtraOccurrence occ;
      bool hit = M(b, n, [&]() {
        occ.first_token = bn.first;
        occ.last_token = bn.last;
        occ.spans.assign(map_.begin() + bn.first, map_.begin() + bn.last);
        return true;
      });
      // Extras must not introduce bindings of their own.
      bool clean = bind_trail_.size() == mark.bind;
      Restore(mark);
      if (hit && clean) {
        found.push_back(std::move(occ));
        taken.push_back(s);
      }
    }
    for (ExtraOccurrence& e : found) extra_.push_back(std::move(e));
  }

  // ---- lists ------------------------------------------------------------

  BoundValue ListValue(MetaKind kind, const std::vector<NodeId>& items,
                       size_t gi, size_t n, const ListCtx& ctx) const {
    BoundValue v;
    v.kind = kind;
    std::vector<std::string_view> texts;
    for (size_t i = gi; i < gi + n; ++i) {
      for (std::string_view t : g_.TokenTexts(items[i])) texts.push_back(t);
    }
    v.key = KeyOf(texts);
    if (n == 0) return v;
    v.has_span = true;
    v.span = {g_.Span(items[gi]).begin, g_.Span(items[gi + n - 1]).end};
    if (kind == MetaKind::kStatementList && ctx.has_interior && gi == 0 &&
        n == items.size()) {
      v.span = ctx.interior;
    }
    v.text = g_.source().substr(v.span.begin, v.span.size());
    return v;
  }

  const MetavarDecl* ListMeta(NodeId p) const {
    const MetavarDecl* m = NodeMeta(p);
    if (!m) return nullptr;
    NodeKind k = pt_.node(p).kind;
    if (k == NodeKind::kMetaStmt && m->kind == MetaKind::kStatementList) {
      return m;
    }
    if (k == NodeKind::kIdentifier && (m->kind == MetaKind::kExpressionList ||
                                       m->kind == MetaKind::kParameterList)) {
      return m;
    }
    return nullptr;
  }

  bool MatchList(const std::vector<NodeId>& pats, size_t pi,
                 const std::vector<NodeId>& items, size_t gi,
                 const ListCtx& ctx, bool item_list, const Done& done) {
    if (pi == pats.size()) {
      if (!ctx.open_end && gi != items.size()) return false;
      return done(gi);
    }
    NodeId p = pats[pi];
    const Node& pn = pt_.node(p);
    size_t room = items.size() - gi;
    if (pn.kind == NodeKind::kDots) {
      for (size_t n = 0; n <= room; ++n) {
        Mark mark = Save();
        if (n > 0) {
          MapToken(pn.first, {g_.Span(items[gi]).begin,
                              g_.Span(items[gi + n - 1]).end});
        }
        if (MatchList(pats, pi + 1, items, gi + n, ctx, item_list, done)) {
          return true;
        }
        Restore(mark);
      }
      return false;
    }
    if (const MetavarDecl* meta = ListMeta(p)) {
      for (size_t n = 0; n <= room; ++n) {
        Mark mark = Save();
        BoundValue v = ListValue(meta->kind, items, gi, n, ctx);
        bool kinds_ok = true;
        for (size_t i = gi; i < gi + n; ++i) {
          NodeKind k = g_.node(items[i]).kind;
          if (meta->kind == MetaKind::kStatementList
                  ? !(IsStatementKind(k) || k == NodeKind::kDeclaration)
                  : meta->kind == MetaKind::kParameterList
                        ? k != NodeKind::kParam
                        : !IsExpressionKind(k)) {
            kinds_ok = false;
          }
        }
        if (kinds_ok && Bind(meta->name, v)) {
          if (v.has_span) MapToken(pn.first, v.span);
          if (MatchList(pats, pi + 1, items, gi + n, ctx, item_list, done)) {
            return true;
          }
        }
        Restore(mark);
      }
      return false;
    }
    if (item_list && pn.kind == NodeKind::kDisj) {
      for (size_t b = 0; b < pn.kids.size(); ++b) {
        NodeId branch = pn.kids[b];
        std::vector<NodeId> spliced(pats.begin(), pats.begin() + pi);
        if (pt_.node(branch).kind == NodeKind::kSeq) {
          for (NodeId x : pt_.node(branch).kids) spliced.push_back(x);
        } else {
          spliced.push_back(branch);
        }
        spliced.insert(spliced.end(), pats.begin() + pi + 1, pats.end());
        Mark mark = Save();
        Choose(p, static_cast<int>(b));
        if (MatchList(spliced, pi, items, gi, ctx, item_list, done)) {
          return true;
        }
        Restore(mark);
      }
      return false;
    }
    if (room == 0) return false;
    return M(p, items[gi], [&]() {
      return MatchList(pats, pi + 1, items, gi + 1, ctx, item_list, done);
    });
  }

  // ---- site search ------------------------------------------------------

  void Record(ByteSpan site) {
    MatchResult r;
    r.rule = rule_.name;
    r.site = site;
    r.bindings = bind_;
    r.token_map = map_;
    r.extra = extra_;
    r.choices = choices_;
    results_.push_back(std::move(r));
  }

  void WalkExpressions(NodeId g, NodeId pattern) {
    if (g == kNoNode) return;
    const Node& gn = g_.node(g);
    if (IsExpressionKind(gn.kind)) {
      bool hit = M(pattern, g, [&]() {
        Record(g_.Span(g));
        return true;
      });
      Restore({0, 0, 0, 0});
      ResetBindings();
      if (hit && !options_.all_sites) return;
    }
    for (NodeId k : gn.kids) WalkExpressions(k, pattern);
  }

  void ResetBindings() {
    // Inherited bindings stay; everything else came from the attempt.
    map_.assign(pt_.sig_count(), kNoSpan);
  }

  void SearchSequence(const std::vector<NodeId>& items, NodeId container,
                      const std::vector<NodeId>& pats) {
    ListCtx ctx;
    ctx.open_end = true;
    const Node& cn = g_.node(container);
    if (cn.kind == NodeKind::kCompound && cn.last - cn.first >= 2) {
      ctx.has_interior = true;
      ctx.interior = {g_.sig(cn.first).span.end,
                      g_.sig(cn.last - 1).span.begin};
    }
    size_t s = 0;
    while (s < items.size()) {
      size_t end = s;
      bool hit = MatchList(pats, 0, items, s, ctx, true, [&](size_t e) {
        if (e == s) return false;
        Record({g_.Span(items[s]).begin, g_.Span(items[e - 1]).end});
        end = e;
        return true;
      });
      Restore({0, 0, 0, 0});
      ResetBindings();
      if (hit && !options_.all_sites) {
        s = end;
        continue;
      }
      Descend(items[s], pats);
      ++s;
    }
  }

  // Statement slots that hold a body rather than a sequence.
  static bool IsBodySlot(NodeKind parent, size_t index) {
    switch (parent) {
      case NodeKind::kFor: return index == 3;
      case NodeKind::kRangeFor: return index == 2;
      case NodeKind::kWhile: return index == 1;
      case NodeKind::kDoWhile: return index == 0;
      case NodeKind::kIf: return index >= 1;
      default: return false;
    }
  }

  void Descend(NodeId g, const std::vector<NodeId>& pats) {
    const Node& gn = g_.node(g);
    for (size_t i = 0; i < gn.kids.size(); ++i) {
      NodeId k = gn.kids[i];
      if (k == kNoNode) continue;
      const Node& kn = g_.node(k);
      if (kn.kind == NodeKind::kCompound) {
        SearchSequence(kn.kids, k, pats);
      } else if (IsBodySlot(gn.kind, i)) {
        SearchSequence({k}, g, pats);
      } else {
        Descend(k, pats);
      }
    }
  }

  const Rule& rule_;
  const SyntaxTree& pt_;
  const SyntaxTree& g_;
  MatchOptions options_;
  std::vector<NodeId> parent_;

  Bindings bind_;
  std::vector<ByteSpan> map_;
  std::vector<ExtraOccurrence> extra_;
  std::map<NodeId, int> choices_;
  std::vector<std::pair<size_t, ByteSpan>> map_trail_;
  std::vector<std::string> bind_trail_;
  std::vector<std::tuple<NodeId, bool, int>> choice_trail_;

  std::vector<MatchResult> results_;
};

}  // namespace

std::vector<MatchResult> MatchPattern(const Rule& rule, const SyntaxTree& tree,
                                      const Bindings& inherited,
                                      const MatchOptions& options) {
  if (rule.kind != Rule::Kind::kPattern) return {};
  return Matcher(rule, tree, inherited, options).Run();
}

}  // namespace spl
