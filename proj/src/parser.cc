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

#include "spl/parser.h"

#include <memory>
#include <utility>
#include <vector>

namespace spl {
namespace {

bool IsBuiltinTypeWord(std::string_view w) {
  return w == "void" || w == "char" || w == "short" || w == "int" ||
         w == "long" || w == "float" || w == "double" || w == "signed" ||
         w == "unsigned" || w == "bool" || w == "_Bool" || w == "auto";
}

bool IsAssignOp(std::string_view s) {
  return s == "=" || s == "+=" || s == "-=" || s == "*=" || s == "/=" ||
         s == "%=" || s == "&=" || s == "^=" || s == "|=" || s == "<<=" ||
         s == ">>=";
}

int BinaryPrecedence(const Token& t) {
  if (t.kind != TokenKind::kPunctuator) return 0;
  std::string_view s = t.text;
  if (s == "||") return 1;
  if (s == "&&") return 2;
  if (s == "|") return 3;
  if (s == "^") return 4;
  if (s == "&") return 5;
  if (s == "==" || s == "!=") return 6;
  if (s == "<" || s == ">" || s == "<=" || s == ">=") return 7;
  if (s == "<<" || s == ">>") return 8;
  if (s == "+" || s == "-") return 9;
  if (s == "*" || s == "/" || s == "%") return 10;
  return 0;
}

class Parser {
 public:
  Parser(std::string source, const ParseOptions& options)
      : src_(std::make_shared<const std::string>(std::move(source))),
        options_(options) {
    tokens_ = Lex(*src_, LexOptions{options.pattern});
    for (size_t i = 0; i < tokens_.size(); ++i) {
      if (!tokens_[i].IsTrivia()) sig_.push_back(i);
    }
  }

  SyntaxTree TranslationUnit() {
    std::vector<NodeId> items;
    while (!AtEnd()) items.push_back(ParseItem());
    return Build(Finish(NodeKind::kTranslationUnit, 0, std::move(items)));
  }

  SyntaxTree Fragment(FragmentKind kind) {
    if (kind == FragmentKind::kTranslationUnit) return TranslationUnit();
    NodeId root = kind == FragmentKind::kStatement ? ParseItem() : ParseExpr();
    if (!AtEnd()) Fail("unexpected trailing tokens");
    return Build(root);
  }

  SyntaxTree Pattern() {
    try {
      NodeId e = ParseExpr();
      if (AtEnd()) {
        return Build(Finish(NodeKind::kExprPattern, 0, {e}));
      }
    } catch (const SyntaxError&) {
    }
    p_ = 0;
    nodes_.clear();
    return TranslationUnit();
  }

 private:
  // ---- token cursor -------------------------------------------------------

  bool AtEnd(size_t k = 0) const { return p_ + k >= sig_.size(); }

  const Token& Tok(size_t k = 0) const {
    static const Token kEof{TokenKind::kWhitespace, {}, {}};
    return AtEnd(k) ? kEof : tokens_[sig_[p_ + k]];
  }

  bool Is(std::string_view s, size_t k = 0) const {
    const Token& t = Tok(k);
    return !AtEnd(k) && t.kind != TokenKind::kLiteral && t.text == s;
  }

  bool IsIdent(size_t k = 0) const {
    return !AtEnd(k) && Tok(k).kind == TokenKind::kIdentifier;
  }

  PatternRole Role(size_t k = 0) const {
    if (!options_.pattern || !options_.role || !IsIdent(k)) {
      return PatternRole::kNone;
    }
    return options_.role(Tok(k).text);
  }

  [[noreturn]] void Fail(const std::string& message) const {
    size_t offset = AtEnd() ? src_->size() : Tok().span.begin;
    std::string what = message;
    if (!AtEnd()) what += " near '" + std::string(Tok().text) + "'";
    throw SyntaxError(what, PositionAt(*src_, offset, options_.path));
  }

  void Expect(std::string_view s) {
    if (!Is(s)) Fail("expected '" + std::string(s) + "'");
    ++p_;
  }

  NodeId Finish(NodeKind kind, uint32_t start, std::vector<NodeId> kids,
                int32_t aux = 0) {
    Node n;
    n.kind = kind;
    n.first = start;
    n.last = static_cast<uint32_t>(p_);
    n.kids = std::move(kids);
    n.aux = aux;
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
  }

  NodeId Leaf(NodeKind kind) {
    uint32_t start = static_cast<uint32_t>(p_++);
    return Finish(kind, start, {});
  }

  SyntaxTree Build(NodeId root) {
    SyntaxTree tree(src_, std::move(tokens_), std::move(nodes_), root);
    tree.path = options_.path;
    return tree;
  }

  // `term@p`: extends the node over the attachment.
  void MaybeAttach(NodeId id) {
    if (!options_.pattern || !Is("@") || !IsIdent(1)) return;
    ++p_;
    nodes_[id].position_token = static_cast<int32_t>(p_);
    ++p_;
    nodes_[id].last = static_cast<uint32_t>(p_);
  }

  // ---- items and statements ----------------------------------------------

  NodeId ParseItem() {
    if (AtEnd()) Fail("unexpected end of input");
    switch (Tok().kind) {
      case TokenKind::kPragmaLine: return Leaf(NodeKind::kPragma);
      case TokenKind::kIncludeLine: return Leaf(NodeKind::kInclude);
      case TokenKind::kDirectiveLine: return Leaf(NodeKind::kDirective);
      default: break;
    }
    if (options_.pattern) {
      if (Is("...")) return Leaf(NodeKind::kDots);
      if (Is("\\(")) return ParseItemGroup();
      PatternRole role = Role();
      if (role == PatternRole::kStatement ||
          role == PatternRole::kStatementList) {
        NodeId id = Leaf(NodeKind::kMetaStmt);
        MaybeAttach(id);
        return id;
      }
    }
    std::string_view t = Tok().text;
    if (Tok().kind == TokenKind::kPunctuator) {
      if (t == "{") return ParseCompound();
      if (t == ";") return Leaf(NodeKind::kEmptyStmt);
    }
    if (Tok().kind == TokenKind::kKeyword) {
      if (t == "for") return ParseFor();
      if (t == "if") return ParseIf();
      if (t == "while") return ParseWhile();
      if (t == "do") return ParseDoWhile();
      if (t == "return") return ParseReturn();
      if (t == "break" || t == "continue") {
        uint32_t start = static_cast<uint32_t>(p_++);
        Expect(";");
        return Finish(t == "break" ? NodeKind::kBreak : NodeKind::kContinue,
                      start, {});
      }
    }
    if (IsDeclStart()) return ParseDeclOrFunction(true, true);
    uint32_t start = static_cast<uint32_t>(p_);
    NodeId e = ParseExpr();
    Expect(";");
    return Finish(NodeKind::kExprStmt, start, {e});
  }

  NodeId ParseItemGroup() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("\\(");
    std::vector<NodeId> branches;
    NodeKind kind = NodeKind::kDisj;
    bool kind_known = false;
    while (true) {
      size_t branch_start = p_;
      size_t node_mark = nodes_.size();
      NodeId branch = kNoNode;
      try {
        std::vector<NodeId> items;
        while (!AtEnd() && !Is("\\|") && !Is("\\&") && !Is("\\)")) {
          items.push_back(ParseItem());
        }
        if (items.empty()) Fail("empty pattern branch");
        branch = items.size() == 1
                     ? items[0]
                     : Finish(NodeKind::kSeq, static_cast<uint32_t>(branch_start),
                              std::move(items));
      } catch (const SyntaxError&) {
        p_ = branch_start;
        nodes_.resize(node_mark);
        branch = ParseExpr();
      }
      branches.push_back(branch);
      if (Is("\\)")) break;
      NodeKind sep = Is("\\|") ? NodeKind::kDisj : NodeKind::kConj;
      if (!Is("\\|") && !Is("\\&")) Fail("expected \\|, \\& or \\)");
      if (kind_known && sep != kind) Fail("cannot mix \\| and \\& in one group");
      kind = sep;
      kind_known = true;
      ++p_;
    }
    Expect("\\)");
    return Finish(kind, start, std::move(branches));
  }

  bool IsDeclStart() const {
    if (AtEnd()) return false;
    const Token& t = Tok();
    if (t.text == "__attribute__") return true;
    if (t.kind == TokenKind::kKeyword) return IsTypeKeyword(t.text);
    if (t.kind != TokenKind::kIdentifier) return false;
    if (Role() == PatternRole::kType) return true;
    if (AtEnd(1)) return false;
    const Token& n = Tok(1);
    if (n.kind == TokenKind::kIdentifier) {
      PatternRole r = Role(1);
      return r != PatternRole::kStatement && r != PatternRole::kStatementList;
    }
    if (n.kind == TokenKind::kKeyword) return IsTypeKeyword(n.text);
    if ((Is("*", 1) || Is("&", 1)) && IsIdent(2)) {
      return Is(";", 3) || Is("=", 3) || Is(",", 3) || Is("[", 3) ||
             Is(")", 3) || Is(":", 3);
    }
    return false;
  }

  NodeId ParseType() {
    uint32_t start = static_cast<uint32_t>(p_);
    bool has_type = false;
    while (!AtEnd()) {
      const Token& t = Tok();
      if (t.kind == TokenKind::kKeyword && IsTypeKeyword(t.text)) {
        bool tagged = t.text == "struct" || t.text == "union";
        if (IsBuiltinTypeWord(t.text)) has_type = true;
        ++p_;
        if (tagged) {
          if (!IsIdent()) Fail("expected tag name");
          ++p_;
          has_type = true;
        }
        continue;
      }
      if (t.kind == TokenKind::kIdentifier) {
        if (Role() == PatternRole::kType) {
          ++p_;
          has_type = true;
          continue;
        }
        const Token& n = Tok(1);
        bool next_is_word =
            !AtEnd(1) && (n.kind == TokenKind::kIdentifier ||
                          (n.kind == TokenKind::kKeyword && IsTypeKeyword(n.text)));
        bool next_is_ptr = Is("*", 1) || Is("&", 1);
        if (next_is_word || (next_is_ptr && (!has_type || IsBuiltinTypeWordBefore()))) {
          ++p_;
          if (!(n.kind == TokenKind::kKeyword && IsTypeKeyword(n.text))) {
            has_type = true;
          }
          continue;
        }
      }
      break;
    }
    if (p_ == start) Fail("expected type");
    return Finish(NodeKind::kType, start, {});
  }

  // `double complex *z`: an identifier after a builtin type word may still be
  // a specifier when a pointer declarator follows.
  bool IsBuiltinTypeWordBefore() const {
    return p_ > 0 && IsBuiltinTypeWord(tokens_[sig_[p_ - 1]].text);
  }

  NodeId ParseAttribute() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("__attribute__");
    Expect("(");
    Expect("(");
    std::vector<NodeId> args;
    while (!Is(")")) {
      args.push_back(ParseAssign());
      if (!Is(",")) break;
      ++p_;
    }
    Expect(")");
    Expect(")");
    return Finish(NodeKind::kAttribute, start, std::move(args));
  }

  NodeId ParseIdentifierLeaf() {
    if (!IsIdent()) Fail("expected identifier");
    NodeId id = Leaf(NodeKind::kIdentifier);
    MaybeAttach(id);
    return id;
  }

  NodeId ParseDeclOrFunction(bool allow_function, bool require_semi) {
    uint32_t start = static_cast<uint32_t>(p_);
    std::vector<NodeId> kids;
    while (Is("__attribute__")) kids.push_back(ParseAttribute());
    NodeId type = ParseType();
    if (allow_function) {
      size_t k = 0;
      while (Is("*", k) || Is("&", k)) ++k;
      if (IsIdent(k) && Is("(", k + 1)) {
        p_ += k;
        nodes_[type].last = static_cast<uint32_t>(p_);
        kids.push_back(type);
        kids.push_back(ParseIdentifierLeaf());
        kids.push_back(ParseParamList());
        if (Is("{")) {
          kids.push_back(ParseCompound());
          return Finish(NodeKind::kFunctionDef, start, std::move(kids));
        }
        Expect(";");
        return Finish(NodeKind::kFunctionDecl, start, std::move(kids));
      }
    }
    kids.push_back(type);
    while (true) {
      kids.push_back(ParseDeclarator(false));
      if (!Is(",")) break;
      ++p_;
    }
    if (require_semi) Expect(";");
    return Finish(NodeKind::kDeclaration, start, std::move(kids));
  }

  NodeId ParseDeclarator(bool is_param) {
    uint32_t start = static_cast<uint32_t>(p_);
    while (Is("*") || Is("&") || Is("const") || Is("restrict") ||
           Is("__restrict__") || Is("__restrict") || Is("volatile")) {
      ++p_;
    }
    std::vector<NodeId> kids;
    if (IsIdent()) {
      kids.push_back(ParseIdentifierLeaf());
    } else if (!is_param) {
      Fail("expected declarator name");
    } else {
      kids.push_back(kNoNode);
    }
    int32_t dims = 0;
    while (Is("[")) {
      ++p_;
      kids.push_back(Is("]") ? kNoNode : ParseExpr());
      Expect("]");
      ++dims;
    }
    if (!is_param && Is("=")) {
      ++p_;
      kids.push_back(Is("{") ? ParseInitList() : ParseAssign());
    }
    if (p_ == start) return kNoNode;
    return Finish(NodeKind::kDeclarator, start, std::move(kids), dims);
  }

  NodeId ParseParamList() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("(");
    std::vector<NodeId> params;
    while (!Is(")")) {
      if (Is("...")) {
        params.push_back(Leaf(NodeKind::kDots));
      } else if (Role() == PatternRole::kParameterList) {
        params.push_back(Leaf(NodeKind::kIdentifier));
      } else {
        uint32_t pstart = static_cast<uint32_t>(p_);
        NodeId type = ParseType();
        NodeId decl = ParseDeclarator(true);
        params.push_back(Finish(NodeKind::kParam, pstart, {type, decl}));
      }
      if (!Is(",")) break;
      ++p_;
    }
    Expect(")");
    return Finish(NodeKind::kParamList, start, std::move(params));
  }

  NodeId ParseCompound() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("{");
    std::vector<NodeId> items;
    while (!Is("}")) {
      if (AtEnd()) Fail("unterminated block");
      items.push_back(ParseItem());
    }
    Expect("}");
    return Finish(NodeKind::kCompound, start, std::move(items));
  }

  NodeId ParseFor() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("for");
    Expect("(");
    NodeId init;
    if (IsDeclStart()) {
      NodeId decl = ParseDeclOrFunction(false, false);
      if (Is(":")) {
        ++p_;
        NodeId range = ParseExpr();
        Expect(")");
        NodeId body = ParseItem();
        return Finish(NodeKind::kRangeFor, start, {decl, range, body});
      }
      Expect(";");
      nodes_[decl].last = static_cast<uint32_t>(p_);
      init = decl;
    } else if (Is(";")) {
      init = Leaf(NodeKind::kEmptyStmt);
    } else {
      uint32_t istart = static_cast<uint32_t>(p_);
      NodeId e = ParseExpr();
      Expect(";");
      init = Finish(NodeKind::kExprStmt, istart, {e});
    }
    NodeId cond = Is(";") ? kNoNode : ParseExpr();
    Expect(";");
    NodeId step = Is(")") ? kNoNode : ParseExpr();
    Expect(")");
    NodeId body = ParseItem();
    return Finish(NodeKind::kFor, start, {init, cond, step, body});
  }

  NodeId ParseIf() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("if");
    Expect("(");
    NodeId cond = ParseExpr();
    Expect(")");
    std::vector<NodeId> kids{cond, ParseItem()};
    if (Is("else")) {
      ++p_;
      kids.push_back(ParseItem());
    }
    return Finish(NodeKind::kIf, start, std::move(kids));
  }

  NodeId ParseWhile() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("while");
    Expect("(");
    NodeId cond = ParseExpr();
    Expect(")");
    NodeId body = ParseItem();
    return Finish(NodeKind::kWhile, start, {cond, body});
  }

  NodeId ParseDoWhile() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("do");
    NodeId body = ParseItem();
    Expect("while");
    Expect("(");
    NodeId cond = ParseExpr();
    Expect(")");
    Expect(";");
    return Finish(NodeKind::kDoWhile, start, {body, cond});
  }

  NodeId ParseReturn() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("return");
    std::vector<NodeId> kids;
    if (!Is(";")) kids.push_back(ParseExpr());
    Expect(";");
    return Finish(NodeKind::kReturn, start, std::move(kids));
  }

  // ---- expressions --------------------------------------------------------

  NodeId ParseExpr() {
    uint32_t start = static_cast<uint32_t>(p_);
    NodeId lhs = ParseAssign();
    while (Is(",")) {
      ++p_;
      NodeId rhs = ParseAssign();
      lhs = Finish(NodeKind::kComma, start, {lhs, rhs});
    }
    return lhs;
  }

  NodeId ParseAssign() {
    uint32_t start = static_cast<uint32_t>(p_);
    NodeId lhs = ParseConditional();
    if (!AtEnd() && Tok().kind == TokenKind::kPunctuator &&
        IsAssignOp(Tok().text)) {
      ++p_;
      NodeId rhs = ParseAssign();
      return Finish(NodeKind::kAssign, start, {lhs, rhs});
    }
    return lhs;
  }

  NodeId ParseConditional() {
    uint32_t start = static_cast<uint32_t>(p_);
    NodeId cond = ParseBinary(1);
    if (!Is("?")) return cond;
    ++p_;
    NodeId then_e = ParseExpr();
    Expect(":");
    NodeId else_e = ParseConditional();
    return Finish(NodeKind::kConditional, start, {cond, then_e, else_e});
  }

  NodeId ParseBinary(int min_prec) {
    uint32_t start = static_cast<uint32_t>(p_);
    NodeId lhs = ParseUnary();
    while (!AtEnd()) {
      int prec = BinaryPrecedence(Tok());
      if (prec == 0 || prec < min_prec) break;
      ++p_;
      NodeId rhs = ParseBinary(prec + 1);
      lhs = Finish(NodeKind::kBinary, start, {lhs, rhs});
    }
    return lhs;
  }

  bool IsCastStart() const {
    return Is("(") && !AtEnd(1) && Tok(1).kind == TokenKind::kKeyword &&
           IsTypeKeyword(Tok(1).text);
  }

  NodeId ParseParenType() {
    Expect("(");
    NodeId type = ParseType();
    while (Is("*")) ++p_;
    nodes_[type].last = static_cast<uint32_t>(p_);
    Expect(")");
    return type;
  }

  NodeId ParseUnary() {
    uint32_t start = static_cast<uint32_t>(p_);
    if (!AtEnd() && Tok().kind == TokenKind::kPunctuator) {
      std::string_view s = Tok().text;
      if (s == "++" || s == "--" || s == "+" || s == "-" || s == "!" ||
          s == "~" || s == "*" || s == "&") {
        ++p_;
        NodeId operand = ParseUnary();
        return Finish(NodeKind::kUnary, start, {operand});
      }
    }
    if (Is("sizeof")) {
      ++p_;
      if (IsCastStart()) {
        NodeId type = ParseParenType();
        return Finish(NodeKind::kSizeofType, start, {type});
      }
      NodeId operand = ParseUnary();
      return Finish(NodeKind::kUnary, start, {operand});
    }
    if (IsCastStart()) {
      NodeId type = ParseParenType();
      NodeId operand = ParseUnary();
      return Finish(NodeKind::kCast, start, {type, operand});
    }
    return ParsePostfix();
  }

  std::vector<NodeId> ParseArgs() {
    Expect("(");
    std::vector<NodeId> args;
    while (!Is(")")) {
      args.push_back(ParseAssign());
      if (!Is(",")) break;
      ++p_;
    }
    Expect(")");
    return args;
  }

  NodeId ParsePostfix() {
    uint32_t start = static_cast<uint32_t>(p_);
    NodeId e = ParsePrimary();
    while (!AtEnd()) {
      if (Is("[")) {
        ++p_;
        std::vector<NodeId> kids{e, ParseAssign()};
        bool multi = false;
        while (Is(",")) {
          ++p_;
          kids.push_back(ParseAssign());
          multi = true;
        }
        Expect("]");
        e = Finish(multi ? NodeKind::kCommaSubscript : NodeKind::kSubscript,
                   start, std::move(kids));
      } else if (Is("(")) {
        std::vector<NodeId> kids{e};
        for (NodeId a : ParseArgs()) kids.push_back(a);
        e = Finish(NodeKind::kCall, start, std::move(kids));
      } else if (Is("<<<")) {
        ++p_;
        std::vector<NodeId> kids{e};
        int32_t config = 0;
        while (true) {
          kids.push_back(ParseAssign());
          ++config;
          if (!Is(",")) break;
          ++p_;
        }
        Expect(">>>");
        if (config != 4) {
          Fail("kernel launch needs exactly four configuration expressions");
        }
        for (NodeId a : ParseArgs()) kids.push_back(a);
        e = Finish(NodeKind::kChevronCall, start, std::move(kids), config);
      } else if (Is(".") || Is("->")) {
        ++p_;
        NodeId member = ParseIdentifierLeaf();
        e = Finish(NodeKind::kMember, start, {e, member});
      } else if (Is("++") || Is("--")) {
        ++p_;
        e = Finish(NodeKind::kPostfix, start, {e});
      } else {
        break;
      }
    }
    return e;
  }

  bool IsStringLiteral(size_t k = 0) const {
    if (AtEnd(k) || Tok(k).kind != TokenKind::kLiteral) return false;
    std::string_view t = Tok(k).text;
    return t.find('"') != std::string_view::npos &&
           t.find('\'') == std::string_view::npos;
  }

  NodeId ParsePrimary() {
    if (AtEnd()) Fail("expected expression");
    uint32_t start = static_cast<uint32_t>(p_);
    const Token& t = Tok();
    if (options_.pattern) {
      if (Is("...")) return Leaf(NodeKind::kDots);
      if (Is("\\(")) return ParseExprGroup();
    }
    if (t.kind == TokenKind::kLiteral) {
      bool str = IsStringLiteral();
      ++p_;
      while (str && IsStringLiteral()) ++p_;
      return Finish(NodeKind::kLiteral, start, {});
    }
    if (Is("true") || Is("false") || Is("nullptr")) {
      return Leaf(NodeKind::kLiteral);
    }
    if (t.kind == TokenKind::kIdentifier || (Is("::") && IsIdent(1))) {
      PatternRole role = Role();
      if (role == PatternRole::kStatement ||
          role == PatternRole::kStatementList) {
        Fail("statement metavariable used as an expression");
      }
      if (Is("(", 1) && !AtEnd(2) && Tok(2).kind == TokenKind::kKeyword &&
          IsTypeKeyword(Tok(2).text)) {
        size_t mark = p_;
        size_t node_mark = nodes_.size();
        try {
          NodeId name = Leaf(NodeKind::kIdentifier);
          NodeId params = ParseParamList();
          if (Is("{")) {
            NodeId body = ParseCompound();
            return Finish(NodeKind::kMacroLambda, start, {name, params, body});
          }
        } catch (const SyntaxError&) {
        }
        p_ = mark;
        nodes_.resize(node_mark);
      }
      if (Is("::")) ++p_;
      ++p_;
      while (Is("::") && IsIdent(1)) p_ += 2;
      NodeId id = Finish(NodeKind::kIdentifier, start, {});
      MaybeAttach(id);
      return id;
    }
    if (Is("(")) {
      ++p_;
      NodeId inner = ParseExpr();
      Expect(")");
      return Finish(NodeKind::kParen, start, {inner});
    }
    Fail("expected expression");
  }

  NodeId ParseExprGroup() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("\\(");
    std::vector<NodeId> branches;
    NodeKind kind = NodeKind::kDisj;
    bool kind_known = false;
    while (true) {
      branches.push_back(ParseExpr());
      if (Is("\\)")) break;
      if (!Is("\\|") && !Is("\\&")) Fail("expected \\|, \\& or \\)");
      NodeKind sep = Is("\\|") ? NodeKind::kDisj : NodeKind::kConj;
      if (kind_known && sep != kind) Fail("cannot mix \\| and \\& in one group");
      kind = sep;
      kind_known = true;
      ++p_;
    }
    Expect("\\)");
    return Finish(kind, start, std::move(branches));
  }

  NodeId ParseInitList() {
    uint32_t start = static_cast<uint32_t>(p_);
    Expect("{");
    std::vector<NodeId> elems;
    while (!Is("}")) {
      elems.push_back(Is("{") ? ParseInitList() : ParseAssign());
      if (!Is(",")) break;
      ++p_;
    }
    Expect("}");
    return Finish(NodeKind::kInitList, start, std::move(elems));
  }

  std::shared_ptr<const std::string> src_;
  ParseOptions options_;
  std::vector<Token> tokens_;
  std::vector<size_t> sig_;
  std::vector<Node> nodes_;
  size_t p_ = 0;
};

}  // namespace

SyntaxTree Parse(std::string source, const ParseOptions& options) {
  return Parser(std::move(source), options).TranslationUnit();
}

SyntaxTree ParseFragment(std::string source, FragmentKind kind,
                         const ParseOptions& options) {
  return Parser(std::move(source), options).Fragment(kind);
}

SyntaxTree ParsePattern(std::string source, const ParseOptions& options) {
  ParseOptions opts = options;
  opts.pattern = true;
  return Parser(std::move(source), opts).Pattern();
}

}  // namespace spl
