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

#include "spl/syntax_tree.h"

#include <algorithm>
#include <utility>

namespace spl {

const char* NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kTranslationUnit: return "translation-unit";
    case NodeKind::kInclude: return "include";
    case NodeKind::kPragma: return "pragma";
    case NodeKind::kDirective: return "directive";
    case NodeKind::kAttribute: return "attribute";
    case NodeKind::kFunctionDef: return "function-def";
    case NodeKind::kFunctionDecl: return "function-decl";
    case NodeKind::kParamList: return "parameter-list";
    case NodeKind::kParam: return "parameter";
    case NodeKind::kType: return "type";
    case NodeKind::kDeclarator: return "declarator";
    case NodeKind::kDeclaration: return "declaration";
    case NodeKind::kInitList: return "init-list";
    case NodeKind::kCompound: return "compound";
    case NodeKind::kExprStmt: return "expression-stmt";
    case NodeKind::kEmptyStmt: return "empty-stmt";
    case NodeKind::kFor: return "for";
    case NodeKind::kRangeFor: return "range-for";
    case NodeKind::kIf: return "if";
    case NodeKind::kWhile: return "while";
    case NodeKind::kDoWhile: return "do-while";
    case NodeKind::kReturn: return "return";
    case NodeKind::kBreak: return "break";
    case NodeKind::kContinue: return "continue";
    case NodeKind::kIdentifier: return "identifier";
    case NodeKind::kLiteral: return "literal";
    case NodeKind::kUnary: return "unary";
    case NodeKind::kSizeofType: return "sizeof-type";
    case NodeKind::kCast: return "cast";
    case NodeKind::kPostfix: return "postfix";
    case NodeKind::kBinary: return "binary";
    case NodeKind::kAssign: return "assignment";
    case NodeKind::kConditional: return "conditional";
    case NodeKind::kComma: return "comma";
    case NodeKind::kCall: return "call";
    case NodeKind::kChevronCall: return "chevron-call";
    case NodeKind::kSubscript: return "subscript";
    case NodeKind::kCommaSubscript: return "comma-subscript";
    case NodeKind::kMember: return "member";
    case NodeKind::kParen: return "paren";
    case NodeKind::kMacroLambda: return "macro-lambda";
    case NodeKind::kExprPattern: return "expression-pattern";
    case NodeKind::kDots: return "dots";
    case NodeKind::kDisj: return "disjunction";
    case NodeKind::kConj: return "conjunction";
    case NodeKind::kSeq: return "sequence";
    case NodeKind::kMetaStmt: return "statement-metavariable";
  }
  return "?";
}

bool IsExpressionKind(NodeKind kind) {
  switch (kind) {
    case NodeKind::kIdentifier:
    case NodeKind::kLiteral:
    case NodeKind::kUnary:
    case NodeKind::kSizeofType:
    case NodeKind::kCast:
    case NodeKind::kPostfix:
    case NodeKind::kBinary:
    case NodeKind::kAssign:
    case NodeKind::kConditional:
    case NodeKind::kComma:
    case NodeKind::kCall:
    case NodeKind::kChevronCall:
    case NodeKind::kSubscript:
    case NodeKind::kCommaSubscript:
    case NodeKind::kMember:
    case NodeKind::kParen:
    case NodeKind::kMacroLambda:
    case NodeKind::kInitList:
      return true;
    default:
      return false;
  }
}

SourcePosition PositionAt(std::string_view source, size_t offset,
                          std::string file) {
  SourcePosition pos;
  pos.file = std::move(file);
  pos.offset = offset;
  offset = std::min(offset, source.size());
  for (size_t i = 0; i < offset; ++i) {
    if (source[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

std::string SyntaxError::Format(const std::string& message,
                                const SourcePosition& where) {
  std::string out = where.file.empty() ? std::string("<input>") : where.file;
  out += ":" + std::to_string(where.line) + ":" + std::to_string(where.column);
  out += ": syntax error: " + message;
  return out;
}

SyntaxTree::SyntaxTree(std::shared_ptr<const std::string> source,
                       std::vector<Token> tokens, std::vector<Node> nodes,
                       NodeId root)
    : source_(std::move(source)),
      tokens_(std::move(tokens)),
      nodes_(std::move(nodes)),
      root_(root) {
  for (size_t i = 0; i < tokens_.size(); ++i) {
    if (!tokens_[i].IsTrivia()) sig_.push_back(i);
  }
}

ByteSpan SyntaxTree::Span(NodeId id) const {
  const Node& n = nodes_[id];
  if (n.first >= n.last) {
    size_t at = n.first < sig_.size() ? sig(n.first).span.begin
                                      : source_->size();
    return {at, at};
  }
  return {sig(n.first).span.begin, sig(n.last - 1).span.end};
}

std::string_view SyntaxTree::Text(NodeId id) const {
  ByteSpan s = Span(id);
  return std::string_view(*source_).substr(s.begin, s.size());
}

std::vector<uint32_t> SyntaxTree::OwnTokens(NodeId id) const {
  const Node& n = nodes_[id];
  std::vector<uint32_t> out;
  uint32_t i = n.first;
  std::vector<std::pair<uint32_t, uint32_t>> ranges;
  for (NodeId k : n.kids) {
    if (k != kNoNode) ranges.emplace_back(nodes_[k].first, nodes_[k].last);
  }
  std::sort(ranges.begin(), ranges.end());
  size_t r = 0;
  while (i < n.last) {
    while (r < ranges.size() && ranges[r].second <= i) ++r;
    if (r < ranges.size() && ranges[r].first <= i) {
      i = ranges[r].second;
      continue;
    }
    out.push_back(i++);
  }
  return out;
}

std::vector<std::string_view> SyntaxTree::TokenTexts(NodeId id) const {
  const Node& n = nodes_[id];
  std::vector<std::string_view> out;
  out.reserve(n.last - n.first);
  for (uint32_t i = n.first; i < n.last; ++i) out.push_back(sig(i).text);
  return out;
}

std::vector<NodeId> SyntaxTree::Preorder(NodeId id) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    if (cur == kNoNode) continue;
    out.push_back(cur);
    const auto& kids = nodes_[cur].kids;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::string SyntaxTree::Unparse() const {
  std::string out;
  out.reserve(source_->size());
  for (const Token& t : tokens_) out.append(t.text);
  return out;
}

}  // namespace spl
