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

#include "ozc/syntax/pretty_printer.h"

#include <sstream>

namespace ozc::syntax {
namespace {

// Binding strength, loosest first. Must agree with the parser.
enum Prec {
  kImplies = 1,
  kOr = 2,
  kAnd = 3,
  kNot = 4,
  kRelation = 5,
  kAdditive = 6,
  kMultiplicative = 7,
  kAtom = 8,
};

int PrecOf(const Expr& expr) {
  if (const auto* logic = expr.As<Logic>()) {
    switch (logic->op) {
      case LogicOp::kImplies: return kImplies;
      case LogicOp::kOr: return kOr;
      case LogicOp::kAnd: return kAnd;
      case LogicOp::kNot: return kNot;
    }
  }
  if (expr.As<Compare>() || expr.As<Membership>()) return kRelation;
  if (const auto* arith = expr.As<Arith>()) {
    return arith->op == ArithOp::kAdd || arith->op == ArithOp::kSub
               ? kAdditive
               : kMultiplicative;
  }
  return kAtom;
}

void Print(const Expr& expr, int min_prec, std::ostream& os);

void PrintBinary(const Expr& lhs, std::string_view op, const Expr& rhs,
                 int lhs_prec, int rhs_prec, std::ostream& os) {
  Print(lhs, lhs_prec, os);
  os << " " << op << " ";
  Print(rhs, rhs_prec, os);
}

void Print(const Expr& expr, int min_prec, std::ostream& os) {
  bool parens = PrecOf(expr) < min_prec;
  if (parens) os << "(";
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IntLiteral>) {
          os << node.digits;
        } else if constexpr (std::is_same_v<T, NameRef>) {
          os << node.id << DecorationSuffix(node.decoration);
        } else if constexpr (std::is_same_v<T, MemberAccess>) {
          Print(*node.object, kAtom, os);
          os << "." << node.field;
        } else if constexpr (std::is_same_v<T, SetLiteral>) {
          os << "{";
          for (size_t i = 0; i < node.elements.size(); ++i) {
            if (i > 0) os << ", ";
            Print(*node.elements[i], kAdditive, os);
          }
          os << "}";
        } else if constexpr (std::is_same_v<T, Arith>) {
          int prec = PrecOf(expr);
          PrintBinary(*node.lhs, ArithOpSpelling(node.op), *node.rhs, prec,
                      prec + 1, os);
        } else if constexpr (std::is_same_v<T, Compare>) {
          PrintBinary(*node.lhs, CompareOpSpelling(node.op), *node.rhs,
                      kAdditive, kAdditive, os);
        } else if constexpr (std::is_same_v<T, Membership>) {
          PrintBinary(*node.element, "in", *node.set, kAdditive, kAdditive, os);
        } else if constexpr (std::is_same_v<T, Logic>) {
          switch (node.op) {
            case LogicOp::kNot:
              os << "not ";
              Print(*node.operands[0], kNot, os);
              break;
            case LogicOp::kImplies:
              PrintBinary(*node.operands[0], "implies", *node.operands[1],
                          kOr, kImplies, os);
              break;
            case LogicOp::kOr:
              PrintBinary(*node.operands[0], "or", *node.operands[1], kOr,
                          kAnd, os);
              break;
            case LogicOp::kAnd:
              PrintBinary(*node.operands[0], "and", *node.operands[1], kAnd,
                          kNot, os);
              break;
          }
        }
      },
      expr.node);
  if (parens) os << ")";
}

void PrintOp(const OpExpr& expr, bool nested, std::ostream& os) {
  if (const auto* ref = expr.As<OpRef>()) {
    os << ref->name;
  } else if (const auto* member = expr.As<OpMemberRef>()) {
    os << member->object << "." << member->name;
  } else if (const auto* binary = expr.As<OpBinary>()) {
    if (nested) os << "(";
    PrintOp(*binary->lhs, false, os);
    os << " " << OpOperatorSpelling(binary->op) << " ";
    PrintOp(*binary->rhs, true, os);
    if (nested) os << ")";
  }
}

std::string SetTypeText(const TypeExpr& type) {
  std::string out = "{";
  for (size_t i = 0; i < type.values.size(); ++i) {
    if (i > 0) out += ", ";
    out += type.values[i];
  }
  return out + "}";
}

std::string TypeText(const TypeExpr& type) {
  return type.kind == TypeExpr::Kind::kSetLiteral ? SetTypeText(type)
                                                  : DumpType(type);
}

}  // namespace

std::string PrettyPrintExpr(const Expr& expr) {
  std::ostringstream os;
  Print(expr, kImplies, os);
  return os.str();
}

std::string PrettyPrintOpExpr(const OpExpr& expr) {
  std::ostringstream os;
  PrintOp(expr, false, os);
  return os.str();
}

std::string PrettyPrint(const Specification& spec) {
  std::ostringstream os;
  for (size_t ci = 0; ci < spec.classes.size(); ++ci) {
    const ClassDecl& cls = spec.classes[ci];
    if (ci > 0) os << "\n";
    os << "class " << cls.name;
    if (!cls.generic_params.empty()) {
      os << "[";
      for (size_t i = 0; i < cls.generic_params.size(); ++i) {
        if (i > 0) os << ", ";
        os << cls.generic_params[i];
      }
      os << "]";
    }
    os << "\n";
    if (cls.visibility) {
      os << "  visibility ";
      for (size_t i = 0; i < cls.visibility->size(); ++i) {
        if (i > 0) os << ", ";
        os << (*cls.visibility)[i].name;
      }
      os << "\n";
    }
    for (const auto& c : cls.constants) {
      os << "  const " << c.name << " : " << TypeText(c.type) << "\n";
    }
    for (const auto& a : cls.axioms) {
      os << "  axiom " << PrettyPrintExpr(*a) << "\n";
    }
    if (cls.state) {
      os << "  state\n";
      for (const auto& v : cls.state->primary_vars) {
        os << "    " << v.name << " : " << TypeText(v.type) << "\n";
      }
      if (!cls.state->secondary_vars.empty()) {
        os << "  secondary\n";
        for (const auto& v : cls.state->secondary_vars) {
          os << "    " << v.name << " : " << TypeText(v.type) << "\n";
        }
      }
      if (!cls.state->invariant_preds.empty()) {
        os << "  where\n";
        for (const auto& p : cls.state->invariant_preds) {
          os << "    " << PrettyPrintExpr(*p) << "\n";
        }
      }
    }
    if (cls.init) {
      os << "  init\n";
      for (const auto& p : cls.init->preds) {
        os << "    " << PrettyPrintExpr(*p) << "\n";
      }
    }
    for (const auto& op : cls.operations) {
      os << "  op " << op.name << "\n";
      if (!op.delta.empty()) {
        os << "    delta ";
        for (size_t i = 0; i < op.delta.size(); ++i) {
          if (i > 0) os << ", ";
          os << op.delta[i].name;
        }
        os << "\n";
      }
      for (const auto& in : op.inputs) {
        os << "    " << in.name << "? : " << TypeText(in.type) << "\n";
      }
      for (const auto& out : op.outputs) {
        os << "    " << out.name << "! : " << TypeText(out.type) << "\n";
      }
      if (!op.preds.empty()) {
        os << "  where\n";
        for (const auto& p : op.preds) {
          os << "    " << PrettyPrintExpr(*p) << "\n";
        }
      }
      os << "  end\n";
    }
    for (const auto& def : cls.op_expr_defs) {
      os << "  op " << def.name << " = " << PrettyPrintOpExpr(*def.expr) << "\n";
    }
    os << "end\n";
  }
  return os.str();
}

}  // namespace ozc::syntax
