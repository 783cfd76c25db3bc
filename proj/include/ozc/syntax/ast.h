// Copyright 2026 The ozc Authors
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

// Abstract syntax for the textual Object-Z dialect. Nodes are immutable once
// built; subtrees are shared through `std::shared_ptr<const ...>`.

#ifndef OZC_SYNTAX_AST_H_
#define OZC_SYNTAX_AST_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "ozc/syntax/source_span.h"

namespace ozc::syntax {

enum class Decoration { kNone, kPrimed, kInput, kOutput };

/// Suffix character for a decoration: "", "'", "?" or "!".
std::string_view DecorationSuffix(Decoration decoration);

// ---------------------------------------------------------------------------
// Types

struct TypeExpr {
  enum class Kind { kNat, kInt, kBool, kClassRef, kSetLiteral };

  Kind kind = Kind::kInt;
  std::string class_name;           // kClassRef
  std::vector<std::string> values;  // kSetLiteral, canonical digits
  SourceSpan span;

  bool IsNumeric() const {
    return kind == Kind::kNat || kind == Kind::kInt || kind == Kind::kSetLiteral;
  }
};

// ---------------------------------------------------------------------------
// Expressions and predicates

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLiteral {
  std::string digits;  // no leading zeros
};

struct NameRef {
  std::string id;
  Decoration decoration = Decoration::kNone;
};

/// `object.field`; `obj.INIT` is a member access whose field is "INIT".
struct MemberAccess {
  ExprPtr object;
  std::string field;
};

struct SetLiteral {
  std::vector<ExprPtr> elements;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv, kMod };
struct Arith {
  ArithOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

enum class CompareOp { kEq, kNeq, kLt, kLe, kGt, kGe };
struct Compare {
  CompareOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Membership {
  ExprPtr element;
  ExprPtr set;
};

enum class LogicOp { kAnd, kOr, kNot, kImplies };
struct Logic {
  LogicOp op;
  std::vector<ExprPtr> operands;  // one for kNot, two otherwise
};

struct Expr {
  using Node = std::variant<IntLiteral, NameRef, MemberAccess, SetLiteral,
                            Arith, Compare, Membership, Logic>;
  Node node;
  SourceSpan span;

  template <typename T>
  const T* As() const {
    return std::get_if<T>(&node);
  }
};

/// Predicates are boolean-valued expressions.
using Predicate = ExprPtr;

std::string_view ArithOpSpelling(ArithOp op);
std::string_view CompareOpSpelling(CompareOp op);
std::string_view LogicOpSpelling(LogicOp op);

// ---------------------------------------------------------------------------
// Operation expressions

struct OpExpr;
using OpExprPtr = std::shared_ptr<const OpExpr>;

enum class OpOperator { kChoice, kSequential, kParallel, kConjunction };

struct OpRef {
  std::string name;
};
struct OpMemberRef {
  std::string object;
  std::string name;
};
struct OpBinary {
  OpOperator op;
  OpExprPtr lhs;
  OpExprPtr rhs;
};

struct OpExpr {
  std::variant<OpRef, OpMemberRef, OpBinary> node;
  SourceSpan span;

  template <typename T>
  const T* As() const {
    return std::get_if<T>(&node);
  }
};

/// "[]", ";", "||" or "&".
std::string_view OpOperatorSpelling(OpOperator op);

// ---------------------------------------------------------------------------
// Declarations

/// `name : type`. Inside an operation `name` is the base name; the list the
/// declaration sits in says whether it was written `name?` or `name!`.
struct VarDecl {
  std::string name;
  TypeExpr type;
  SourceSpan span;
};

using ConstantDecl = VarDecl;

struct StateBlock {
  std::vector<VarDecl> primary_vars;
  std::vector<VarDecl> secondary_vars;
  std::vector<Predicate> invariant_preds;
  SourceSpan span;
};

struct InitBlock {
  std::vector<Predicate> preds;
  SourceSpan span;
};

struct DeltaEntry {
  std::string name;
  SourceSpan span;
};

struct OperationSchema {
  std::string name;
  std::vector<DeltaEntry> delta;
  std::vector<VarDecl> inputs;
  std::vector<VarDecl> outputs;
  std::vector<Predicate> preds;
  SourceSpan span;
};

struct OpExprDef {
  std::string name;
  OpExprPtr expr;
  SourceSpan span;
};

struct VisibilityEntry {
  std::string name;
  SourceSpan span;
};

struct ClassDecl {
  std::string name;
  std::vector<std::string> generic_params;
  std::optional<std::vector<VisibilityEntry>> visibility;
  std::vector<ConstantDecl> constants;
  std::vector<Predicate> axioms;
  std::optional<StateBlock> state;
  std::optional<InitBlock> init;
  std::vector<OperationSchema> operations;
  std::vector<OpExprDef> op_expr_defs;
  SourceSpan span;
};

struct Specification {
  std::string file;
  std::vector<ClassDecl> classes;
};

// ---------------------------------------------------------------------------
// Helpers

/// Builds a node with the given span.
template <typename T>
ExprPtr MakeExpr(T node, SourceSpan span) {
  return std::make_shared<const Expr>(Expr{std::move(node), std::move(span)});
}

/// Canonical s-expression rendering that omits spans. Two trees are equal
/// modulo spans iff their dumps are equal.
std::string DumpExpr(const Expr& expr);
std::string DumpOpExpr(const OpExpr& expr);
std::string DumpType(const TypeExpr& type);
std::string DumpAst(const Specification& spec);

bool EqualModuloSpans(const Specification& a, const Specification& b);

/// Calls `visit` on every expression node of `expr`, parents first.
template <typename Fn>
void ForEachExpr(const Expr& expr, Fn&& visit) {
  visit(expr);
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, MemberAccess>) {
          ForEachExpr(*node.object, visit);
        } else if constexpr (std::is_same_v<T, SetLiteral>) {
          for (const auto& e : node.elements) ForEachExpr(*e, visit);
        } else if constexpr (std::is_same_v<T, Arith> ||
                             std::is_same_v<T, Compare>) {
          ForEachExpr(*node.lhs, visit);
          ForEachExpr(*node.rhs, visit);
        } else if constexpr (std::is_same_v<T, Membership>) {
          ForEachExpr(*node.element, visit);
          ForEachExpr(*node.set, visit);
        } else if constexpr (std::is_same_v<T, Logic>) {
          for (const auto& e : node.operands) ForEachExpr(*e, visit);
        }
      },
      expr.node);
}

/// True if any name in `expr` carries `decoration`.
bool MentionsDecoration(const Expr& expr, Decoration decoration);

}  // namespace ozc::syntax

#endif  // OZC_SYNTAX_AST_H_
