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

#include "ozc/codegen/python_expr.h"

#include <optional>

namespace ozc::codegen {
namespace {

using syntax::Expr;

constexpr int kOr = 1;
constexpr int kAnd = 2;
constexpr int kNot = 3;
constexpr int kRelation = 4;
constexpr int kAdditive = 5;
constexpr int kMultiplicative = 6;
constexpr int kAtom = 7;

std::string_view CompareText(syntax::CompareOp op) {
  switch (op) {
    case syntax::CompareOp::kEq: return "==";
    case syntax::CompareOp::kNeq: return "!=";
    case syntax::CompareOp::kLt: return "<";
    case syntax::CompareOp::kLe: return "<=";
    case syntax::CompareOp::kGt: return ">";
    case syntax::CompareOp::kGe: return ">=";
  }
  return "==";
}

std::string_view ArithText(syntax::ArithOp op) {
  switch (op) {
    case syntax::ArithOp::kAdd: return "+";
    case syntax::ArithOp::kSub: return "-";
    case syntax::ArithOp::kMul: return "*";
    case syntax::ArithOp::kDiv: return "//";
    case syntax::ArithOp::kMod: return "%";
  }
  return "+";
}

class Renderer {
 public:
  explicit Renderer(const PyContext& ctx) : ctx_(ctx) {}

  std::string Render(const Expr& expr, int min_prec) {
    int prec = kAtom;
    std::string text = RenderNode(expr, prec);
    return prec < min_prec ? "(" + text + ")" : text;
  }

 private:
  std::string RenderNode(const Expr& expr, int& prec) {
    if (const auto* lit = expr.As<syntax::IntLiteral>()) return lit->digits;
    if (const auto* name = expr.As<syntax::NameRef>()) return RenderName(*name);
    if (const auto* member = expr.As<syntax::MemberAccess>()) {
      std::string object = Render(*member->object, kAtom);
      const sema::ClassModel* owner = ObjectClass(*member->object);
      std::string field = owner ? AttributeName(*owner, member->field, ctx_)
                                : member->field;
      return object + "." + field;
    }
    if (const auto* set = expr.As<syntax::SetLiteral>()) {
      if (set->elements.empty()) return "frozenset()";
      std::string out = "{";
      for (size_t i = 0; i < set->elements.size(); ++i) {
        if (i > 0) out += ", ";
        out += Render(*set->elements[i], kOr);
      }
      return out + "}";
    }
    if (const auto* arith = expr.As<syntax::Arith>()) {
      bool additive = arith->op == syntax::ArithOp::kAdd ||
                      arith->op == syntax::ArithOp::kSub;
      prec = additive ? kAdditive : kMultiplicative;
      return Render(*arith->lhs, prec) + " " + std::string(ArithText(arith->op)) +
             " " + Render(*arith->rhs, prec + 1);
    }
    if (const auto* cmp = expr.As<syntax::Compare>()) {
      prec = kRelation;
      return Render(*cmp->lhs, kAdditive) + " " + std::string(CompareText(cmp->op)) +
             " " + Render(*cmp->rhs, kAdditive);
    }
    if (const auto* in = expr.As<syntax::Membership>()) {
      prec = kRelation;
      return Render(*in->element, kAdditive) + " in " + Render(*in->set, kAdditive);
    }
    const auto& logic = std::get<syntax::Logic>(expr.node);
    switch (logic.op) {
      case syntax::LogicOp::kNot:
        prec = kNot;
        return "not " + Render(*logic.operands[0], kNot);
      case syntax::LogicOp::kImplies:
        prec = kOr;
        return "not " + Render(*logic.operands[0], kNot) + " or " +
               Render(*logic.operands[1], kOr);
      case syntax::LogicOp::kAnd:
      case syntax::LogicOp::kOr: {
        prec = logic.op == syntax::LogicOp::kAnd ? kAnd : kOr;
        std::string sep = logic.op == syntax::LogicOp::kAnd ? " and " : " or ";
        std::string out;
        for (size_t i = 0; i < logic.operands.size(); ++i) {
          if (i > 0) out += sep;
          out += Render(*logic.operands[i], prec);
        }
        return out;
      }
    }
    return "";
  }

  std::string RenderName(const syntax::NameRef& name) {
    switch (name.decoration) {
      case syntax::Decoration::kInput:
        return name.id;
      case syntax::Decoration::kOutput:
        if (ctx_.result_name.empty()) return name.id;
        if (ctx_.multiple_outputs) {
          return ctx_.result_name + "[" + PythonString(name.id) + "]";
        }
        return ctx_.result_name;
      case syntax::Decoration::kPrimed:
        return ctx_.new_receiver + "." + AttributeName(*ctx_.cls, name.id, ctx_);
      case syntax::Decoration::kNone:
        break;
    }
    const sema::MemberInfo* info = ctx_.cls->table.Find(name.id);
    if (info && info->IsValue()) {
      return ctx_.old_receiver + "." + AttributeName(*ctx_.cls, name.id, ctx_);
    }
    return name.id;
  }

  // Class of an object-valued expression, when statically known.
  const sema::ClassModel* ObjectClass(const Expr& expr) {
    std::optional<std::string> class_name;
    if (const auto* name = expr.As<syntax::NameRef>()) {
      if (name->decoration == syntax::Decoration::kInput ||
          name->decoration == syntax::Decoration::kOutput) {
        auto it = ctx_.locals.find(name->id);
        if (it != ctx_.locals.end() &&
            it->second.kind == syntax::TypeExpr::Kind::kClassRef) {
          class_name = it->second.class_name;
        }
      } else {
        class_name = ctx_.cls->table.ObjectClass(name->id);
      }
    } else if (const auto* member = expr.As<syntax::MemberAccess>()) {
      const sema::ClassModel* owner = ObjectClass(*member->object);
      if (owner) class_name = owner->table.ObjectClass(member->field);
    }
    return class_name ? ctx_.model->FindClass(*class_name) : nullptr;
  }

  const PyContext& ctx_;
};

}  // namespace

std::string AttributeName(const sema::ClassModel& owner, std::string_view name,
                          const PyContext& ctx) {
  if (owner.table.IsVisible(name)) return std::string(name);
  if (ctx.inside_class && ctx.cls == &owner) return "__" + std::string(name);
  return "_" + owner.decl->name + "__" + std::string(name);
}

std::string RenderPythonExpr(const syntax::Expr& expr, const PyContext& ctx) {
  return Renderer(ctx).Render(expr, 0);
}

std::string PythonString(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '\\' || c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace ozc::codegen
