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

#ifndef SPL_SYNTAX_TREE_H_
#define SPL_SYNTAX_TREE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spl/lexer.h"

namespace spl {

using NodeId = int32_t;
inline constexpr NodeId kNoNode = -1;

enum class NodeKind {
  // Top level and declarations.
  kTranslationUnit,  // kids: items
  kInclude,          // leaf: one include-line token
  kPragma,           // leaf: one pragma-line token (top level or statement)
  kDirective,        // leaf: any other preprocessor line
  kAttribute,        // __attribute__((args)); kids: args
  kFunctionDef,      // kids: attributes..., type, name, params, body
  kFunctionDecl,     // kids: attributes..., type, name, params
  kParamList,        // kids: params (kParam, kDots, or list metavariable)
  kParam,            // kids: type, declarator (may be kNoNode)
  kType,             // leaf over the specifier tokens
  kDeclarator,       // kids: name (may be kNoNode), dims (aux of them), init?
  kDeclaration,      // kids: attributes..., type, declarators...
  kInitList,         // kids: elements

  // Statements.
  kCompound,  // kids: items
  kExprStmt,  // kids: expr
  kEmptyStmt,
  kFor,       // kids: init statement, cond?, step?, body
  kRangeFor,  // kids: declaration, range, body
  kIf,        // kids: cond, then, else?
  kWhile,     // kids: cond, body
  kDoWhile,   // kids: body, cond
  kReturn,    // kids: value?
  kBreak,
  kContinue,

  // Expressions.
  kIdentifier,     // leaf; may span a qualified name a::b
  kLiteral,        // leaf; adjacent string literals merge
  kUnary,          // kids: operand; operator is the first own token
  kSizeofType,     // kids: type
  kCast,           // kids: type, operand
  kPostfix,        // kids: operand; ++ or --
  kBinary,         // kids: lhs, rhs
  kAssign,         // kids: lhs, rhs (= and compound assignment)
  kConditional,    // kids: cond, then, else
  kComma,          // kids: lhs, rhs
  kCall,           // kids: callee, args...
  kChevronCall,    // kids: callee, 4 config exprs, args...
  kSubscript,      // kids: base, index
  kCommaSubscript, // kids: base, indices...
  kMember,         // kids: base, member name
  kParen,          // kids: inner
  kMacroLambda,    // NAME(params){body}; kids: name, params, body

  // Semantic-patch pattern nodes.
  kExprPattern,  // root of an expression pattern; kids: expr
  kDots,         // `...`
  kDisj,         // \( a \| b \); kids: branches
  kConj,         // \( a \& b \); kids: branches
  kSeq,          // multi-item disjunction/conjunction branch; kids: items
  kMetaStmt,     // statement or statement-list metavariable occurrence
};

const char* NodeKindName(NodeKind kind);
bool IsExpressionKind(NodeKind kind);

struct Node {
  NodeKind kind;
  // Range of significant-token indices [first, last).
  uint32_t first = 0;
  uint32_t last = 0;
  std::vector<NodeId> kids;
  // kDeclarator: number of array dimensions; kChevronCall: config count.
  int32_t aux = 0;
  // Pattern trees only: significant-token index of the position metavariable
  // name in `term@p`, or -1.
  int32_t position_token = -1;
};

struct SourcePosition {
  std::string file;
  size_t offset = 0;
  size_t line = 1;    // 1-based
  size_t column = 1;  // 1-based, in bytes
  friend bool operator==(const SourcePosition&,
                         const SourcePosition&) = default;
};

SourcePosition PositionAt(std::string_view source, size_t offset,
                          std::string file = {});

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, SourcePosition where)
      : std::runtime_error(Format(message, where)),
        message_(message),
        where_(where) {}
  const SourcePosition& where() const { return where_; }
  const std::string& message() const { return message_; }

 private:
  static std::string Format(const std::string& message,
                            const SourcePosition& where);
  std::string message_;
  SourcePosition where_;
};

// Lossless syntax tree. The source buffer is shared and immutable, so copies
// are cheap and token views stay valid.
class SyntaxTree {
 public:
  SyntaxTree() = default;
  SyntaxTree(std::shared_ptr<const std::string> source,
             std::vector<Token> tokens, std::vector<Node> nodes, NodeId root);

  const std::string& source() const { return *source_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  size_t sig_count() const { return sig_.size(); }
  const Token& sig(size_t i) const { return tokens_[sig_[i]]; }
  // Index into tokens() of the i-th significant token.
  size_t sig_index(size_t i) const { return sig_[i]; }

  NodeId root() const { return root_; }
  size_t node_count() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_[id]; }

  ByteSpan Span(NodeId id) const;
  std::string_view Text(NodeId id) const;
  // Significant-token indices inside the node that no child covers.
  std::vector<uint32_t> OwnTokens(NodeId id) const;
  // Texts of the node's significant tokens; the structural identity of a
  // subtree.
  std::vector<std::string_view> TokenTexts(NodeId id) const;
  // Node ids in preorder, starting at `id`.
  std::vector<NodeId> Preorder(NodeId id) const;

  // Concatenates every token, trivia included.
  std::string Unparse() const;

  std::string path;

 private:
  std::shared_ptr<const std::string> source_;
  std::vector<Token> tokens_;
  std::vector<size_t> sig_;
  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
};

}  // namespace spl

#endif  // SPL_SYNTAX_TREE_H_
