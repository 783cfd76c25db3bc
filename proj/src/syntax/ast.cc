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

#include "ozc/syntax/ast.h"

#include <sstream>

namespace ozc::syntax {

std::string_view DecorationSuffix(Decoration decoration) {
  switch (decoration) {
    case Decoration::kNone: return "";
    case Decoration::kPrimed: return "'";
    case Decoration::kInput: return "?";
    case Decoration::kOutput: return "!";
  }
  return "";
}

std::string_view ArithOpSpelling(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return "+";
    case ArithOp::kSub: return "-";
    case ArithOp::kMul: return "*";
    case ArithOp::kDiv: return "div";
    case ArithOp::kMod: return "mod";
  }
  return "?";
}

std::string_view CompareOpSpelling(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNeq: return "!=";
    case CompareOp::kLt: return "<";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGt: return ">";
    case CompareOp::kGe: return ">=";
  }
  return "?";
}

std::string_view LogicOpSpelling(LogicOp op) {
  switch (op) {
    case LogicOp::kAnd: return "and";
    case LogicOp::kOr: return "or";
    case LogicOp::kNot: return "not";
    case LogicOp::kImplies: return "implies";
  }
  return "?";
}

std::string_view OpOperatorSpelling(OpOperator op) {
  switch (op) {
    case OpOperator::kChoice: return "[]";
    case OpOperator::kSequential: return ";";
    case OpOperator::kParallel: return "||";
    case OpOperator::kConjunction: return "&";
  }
  return "?";
}

namespace {

void Dump(const Expr& expr, std::ostream& os) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IntLiteral>) {
          os << node.digits;
        } else if constexpr (std::is_same_v<T, NameRef>) {
          os << node.id << DecorationSuffix(node.decoration);
        } else if constexpr (std::is_same_v<T, MemberAccess>) {
          os << "(. ";
          Dump(*node.object, os);
          os << " " << node.field << ")";
        } else if constexpr (std::is_same_v<T, SetLiteral>) {
          os << "(set";
          for (const auto& e : node.elements) {
            os << " ";
            Dump(*e, os);
          }
          os << ")";
        } else if constexpr (std::is_same_v<T, Arith>) {
          os << "(" << ArithOpSpelling(node.op) << " ";
          Dump(*node.lhs, os);
          os << " ";
          Dump(*node.rhs, os);
          os << ")";
        } else if constexpr (std::is_same_v<T, Compare>) {
          os << "(" << CompareOpSpelling(node.op) << " ";
          Dump(*node.lhs, os);
          os << " ";
          Dump(*node.rhs, os);
          os << ")";
        } else if constexpr (std::is_same_v<T, Membership>) {
          os << "(in ";
          Dump(*node.element, os);
          os << " ";
          Dump(*node.set, os);
          os << ")";
        } else if constexpr (std::is_same_v<T, Logic>) {
          os << "(" << LogicOpSpelling(node.op);
          for (const auto& e : node.operands) {
            os << " ";
            Dump(*e, os);
          }
          os << ")";
        }
      },
      expr.node);
}

void DumpOp(const OpExpr& expr, std::ostream& os) {
  if (const auto* ref = expr.As<OpRef>()) {
    os << ref->name;
  } else if (const auto* member = expr.As<OpMemberRef>()) {
    os << member->object << "." << member->name;
  } else if (const auto* binary = expr.As<OpBinary>()) {
    os << "(" << OpOperatorSpelling(binary->op) << " ";
    DumpOp(*binary->lhs, os);
    os << " ";
    DumpOp(*binary->rhs, os);
    os << ")";
  }
}

void DumpDecls(std::string_view tag, const std::vector<VarDecl>& decls,
               std::ostream& os) {
  os << " (" << tag;
  for (const auto& d : decls) os << " (" << d.name << " " << DumpType(d.type) << ")";
  os << ")";
}

void DumpPreds(std::string_view tag, const std::vector<Predicate>& preds,
               std::ostream& os) {
  os << " (" << tag;
  for (const auto& p : preds) os << " " << DumpExpr(*p);
  os << ")";
}

}  // namespace

std::string DumpExpr(const Expr& expr) {
  std::ostringstream os;
  Dump(expr, os);
  return os.str();
}

std::string DumpOpExpr(const OpExpr& expr) {
  std::ostringstream os;
  DumpOp(expr, os);
  return os.str();
}

std::string DumpType(const TypeExpr& type) {
  switch (type.kind) {
    case TypeExpr::Kind::kNat: return "NAT";
    case TypeExpr::Kind::kInt: return "INT";
    case TypeExpr::Kind::kBool: return "BOOL";
    case TypeExpr::Kind::kClassRef: return type.class_name;
    case TypeExpr::Kind::kSetLiteral: {
      std::string out = "{";
      for (size_t i = 0; i < type.values.size(); ++i) {
        if (i > 0) out += ",";
        out += type.values[i];
      }
      return out + "}";
    }
  }
  return "?";
}

std::string DumpAst(const Specification& spec) {
  std::ostringstream os;
  os << "(spec";
  for (const auto& c : spec.classes) {
    os << "\n (class " << c.name << " (generic";
    for (const auto& g : c.generic_params) os << " " << g;
    os << ")";
    if (c.visibility) {
      os << " (visibility";
      for (const auto& v : *c.visibility) os << " " << v.name;
      os << ")";
    }
    DumpDecls("const", c.constants, os);
    DumpPreds("axiom", c.axioms, os);
    if (c.state) {
      os << " (state";
      DumpDecls("primary", c.state->primary_vars, os);
      DumpDecls("secondary", c.state->secondary_vars, os);
      DumpPreds("where", c.state->invariant_preds, os);
      os << ")";
    }
    if (c.init) DumpPreds("init", c.init->preds, os);
    for (const auto& op : c.operations) {
      os << "\n  (op " << op.name << " (delta";
      for (const auto& d : op.delta) os << " " << d.name;
      os << ")";
      DumpDecls("in", op.inputs, os);
      DumpDecls("out", op.outputs, os);
      DumpPreds("where", op.preds, os);
      os << ")";
    }
    for (const auto& def : c.op_expr_defs) {
      os << "\n  (opexpr " << def.name << " " << DumpOpExpr(*def.expr) << ")";
    }
    os << ")";
  }
  os << ")";
  return os.str();
}

bool EqualModuloSpans(const Specification& a, const Specification& b) {
  return DumpAst(a) == DumpAst(b);
}

bool MentionsDecoration(const Expr& expr, Decoration decoration) {
  bool found = false;
  ForEachExpr(expr, [&](const Expr& e) {
    if (const auto* name = e.As<NameRef>()) {
      found = found || name->decoration == decoration;
    }
  });
  return found;
}

}  // namespace ozc::syntax
