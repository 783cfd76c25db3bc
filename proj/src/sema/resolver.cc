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

#include <algorithm>
#include <set>

#include "ozc/sema/symbol_table.h"

namespace ozc::sema {
namespace {

using syntax::ClassDecl;
using syntax::Decoration;
using syntax::Expr;
using syntax::OperationSchema;
using syntax::TypeExpr;

enum class Context { kAxiom, kStateInvariant, kInit, kOperation };

struct ValueType {
  enum class Kind { kInt, kBool, kSet, kObject };
  Kind kind;
  std::string class_name;
};
using MaybeType = std::optional<ValueType>;

std::string KindName(ValueType::Kind kind) {
  switch (kind) {
    case ValueType::Kind::kInt: return "an integer";
    case ValueType::Kind::kBool: return "a boolean";
    case ValueType::Kind::kSet: return "a set";
    case ValueType::Kind::kObject: return "an object";
  }
  return "a value";
}

class Resolver {
 public:
  Resolver(const syntax::Specification& spec, const SymbolTables& tables,
           std::vector<Diagnostic>& diagnostics)
      : spec_(spec), tables_(tables), diagnostics_(diagnostics) {}

  void Run() {
    std::set<std::string> done;
    for (const ClassDecl& cls : spec_.classes) {
      auto it = tables_.find(cls.name);
      if (it == tables_.end() || !done.insert(cls.name).second) continue;
      cls_ = &cls;
      table_ = &it->second;
      CheckClass(cls);
    }
  }

 private:
  void Error(std::string code, std::string message, const SourceSpan& span) {
    diagnostics_.push_back(
        Diagnostic{std::move(code), Severity::kError, std::move(message), span});
  }

  void CheckReserved(const std::string& name, const SourceSpan& span) {
    if (IsReservedIdentifier(name)) {
      Error("S009", "'" + name + "' is a reserved identifier", span);
    }
  }

  void CheckType(const TypeExpr& type) {
    if (type.kind != TypeExpr::Kind::kClassRef) return;
    if (IsGeneric(type.class_name)) return;
    if (tables_.find(type.class_name) == tables_.end()) {
      Error("S001", "unknown class '" + type.class_name + "'", type.span);
    }
  }

  bool IsGeneric(const std::string& name) const {
    const auto& params = cls_->generic_params;
    return std::find(params.begin(), params.end(), name) != params.end();
  }

  MaybeType FromTypeExpr(const TypeExpr& type) const {
    switch (type.kind) {
      case TypeExpr::Kind::kNat:
      case TypeExpr::Kind::kInt:
      case TypeExpr::Kind::kSetLiteral:
        return ValueType{ValueType::Kind::kInt, ""};
      case TypeExpr::Kind::kBool:
        return ValueType{ValueType::Kind::kBool, ""};
      case TypeExpr::Kind::kClassRef:
        if (IsGeneric(type.class_name)) return std::nullopt;
        return ValueType{ValueType::Kind::kObject, type.class_name};
    }
    return std::nullopt;
  }

  void CheckClass(const ClassDecl& cls) {
    CheckReserved(cls.name, cls.span);
    if (cls.visibility) {
      for (const auto& entry : *cls.visibility) {
        if (entry.name != "INIT" && !table_->Find(entry.name)) {
          Error("S002",
                "visibility entry '" + entry.name + "' names no member of '" +
                    cls.name + "'",
                entry.span);
        }
      }
    }
    for (const auto& c : cls.constants) {
      CheckReserved(c.name, c.span);
      CheckType(c.type);
    }
    if (cls.state) {
      for (const auto* list : {&cls.state->primary_vars, &cls.state->secondary_vars}) {
        for (const auto& v : *list) {
          CheckReserved(v.name, v.span);
          CheckType(v.type);
        }
      }
    }
    for (const auto& op : cls.operations) CheckReserved(op.name, op.span);
    for (const auto& def : cls.op_expr_defs) CheckReserved(def.name, def.span);

    op_ = nullptr;
    context_ = Context::kAxiom;
    for (const auto& axiom : cls.axioms) CheckPredicate(*axiom);
    if (cls.state) {
      context_ = Context::kStateInvariant;
      for (const auto& pred : cls.state->invariant_preds) CheckPredicate(*pred);
    }
    if (cls.init) {
      context_ = Context::kInit;
      for (const auto& pred : cls.init->preds) {
        if (!CheckMemberInit(*pred)) CheckPredicate(*pred);
      }
    }
    context_ = Context::kOperation;
    for (const auto& op : cls.operations) {
      op_ = &op;
      for (const auto* list : {&op.inputs, &op.outputs}) {
        for (const auto& decl : *list) {
          CheckReserved(decl.name, decl.span);
          CheckType(decl.type);
        }
      }
      for (const auto& pred : op.preds) CheckPredicate(*pred);
    }
    op_ = nullptr;
    for (const auto& def : cls.op_expr_defs) CheckOpExpr(*def.expr);
  }

  // `obj.INIT` as a whole INIT predicate. Returns false if `pred` is not of
  // that shape and should be checked as an ordinary predicate.
  bool CheckMemberInit(const Expr& pred) {
    const auto* member = pred.As<syntax::MemberAccess>();
    if (!member || member->field != "INIT") return false;
    const auto* object = member->object->As<syntax::NameRef>();
    const MemberInfo* info = object ? table_->Find(object->id) : nullptr;
    if (!object) {
      Error("S006", "INIT must be applied to a member object", pred.span);
    } else if (!info) {
      Error("S001", "unresolved name '" + object->id + "'", member->object->span);
    } else if (info->kind != MemberKind::kPrimaryVar ||
               !table_->ObjectClass(object->id)) {
      Error("S006",
            "'" + object->id + "' is not a class-typed state variable; "
            "INIT cannot be applied to it",
            pred.span);
    }
    return true;
  }

  void CheckPredicate(const Expr& pred) {
    MaybeType type = TypeOf(pred);
    if (type && type->kind != ValueType::Kind::kBool) {
      Error("S040", "predicate is " + KindName(type->kind) + ", not a boolean",
            pred.span);
    }
  }

  void Expect(const MaybeType& type, ValueType::Kind want, const Expr& expr) {
    if (type && type->kind != want) {
      Error("S040",
            "expected " + KindName(want) + ", found " + KindName(type->kind),
            expr.span);
    }
  }

  MaybeType TypeOf(const Expr& expr) {
    using K = ValueType::Kind;
    if (expr.As<syntax::IntLiteral>()) return ValueType{K::kInt, ""};
    if (const auto* name = expr.As<syntax::NameRef>()) return TypeOfName(*name, expr);
    if (const auto* member = expr.As<syntax::MemberAccess>()) {
      return TypeOfMember(*member, expr);
    }
    if (const auto* set = expr.As<syntax::SetLiteral>()) {
      for (const auto& e : set->elements) Expect(TypeOf(*e), K::kInt, *e);
      return ValueType{K::kSet, ""};
    }
    if (const auto* arith = expr.As<syntax::Arith>()) {
      Expect(TypeOf(*arith->lhs), K::kInt, *arith->lhs);
      Expect(TypeOf(*arith->rhs), K::kInt, *arith->rhs);
      return ValueType{K::kInt, ""};
    }
    if (const auto* cmp = expr.As<syntax::Compare>()) {
      MaybeType lhs = TypeOf(*cmp->lhs);
      MaybeType rhs = TypeOf(*cmp->rhs);
      if (cmp->op == syntax::CompareOp::kEq || cmp->op == syntax::CompareOp::kNeq) {
        if (lhs && rhs && lhs->kind != rhs->kind) {
          Error("S040",
                "cannot compare " + KindName(lhs->kind) + " with " +
                    KindName(rhs->kind),
                expr.span);
        }
      } else {
        Expect(lhs, K::kInt, *cmp->lhs);
        Expect(rhs, K::kInt, *cmp->rhs);
      }
      return ValueType{K::kBool, ""};
    }
    if (const auto* in = expr.As<syntax::Membership>()) {
      Expect(TypeOf(*in->element), K::kInt, *in->element);
      Expect(TypeOf(*in->set), K::kSet, *in->set);
      return ValueType{K::kBool, ""};
    }
    if (const auto* logic = expr.As<syntax::Logic>()) {
      for (const auto& e : logic->operands) Expect(TypeOf(*e), K::kBool, *e);
      return ValueType{K::kBool, ""};
    }
    return std::nullopt;
  }

  MaybeType TypeOfName(const syntax::NameRef& name, const Expr& expr) {
    if (name.decoration == Decoration::kInput ||
        name.decoration == Decoration::kOutput) {
      bool input = name.decoration == Decoration::kInput;
      if (op_) {
        const auto& decls = input ? op_->inputs : op_->outputs;
        for (const auto& decl : decls) {
          if (decl.name == name.id) return FromTypeExpr(decl.type);
        }
      }
      Error("S001",
            std::string("no ") + (input ? "input" : "output") + " named '" +
                name.id + std::string(syntax::DecorationSuffix(name.decoration)) +
                "'" + (op_ ? " in operation '" + op_->name + "'" : ""),
            expr.span);
      return std::nullopt;
    }
    const MemberInfo* info = table_->Find(name.id);
    if (!info) {
      Error("S001", "unresolved name '" + name.id + "'", expr.span);
      return std::nullopt;
    }
    if (info->IsOperation()) {
      Error("S007",
            "'" + name.id + "' is an " + std::string(MemberKindName(info->kind)) +
                " and cannot be used as a value",
            expr.span);
      return std::nullopt;
    }
    if (context_ == Context::kAxiom && info->kind != MemberKind::kConstant) {
      Error("S008",
            "axiom refers to " + std::string(MemberKindName(info->kind)) + " '" +
                name.id + "'; axioms may only constrain constants",
            expr.span);
    }
    return FromTypeExpr(*info->type);
  }

  MaybeType TypeOfMember(const syntax::MemberAccess& member, const Expr& expr) {
    MaybeType object = TypeOf(*member.object);
    if (member.field == "INIT") {
      Error("S006", "INIT reference is only allowed as a whole INIT predicate",
            expr.span);
      return std::nullopt;
    }
    if (!object) return std::nullopt;
    if (object->kind != ValueType::Kind::kObject) {
      Error("S007", "member access on " + KindName(object->kind), expr.span);
      return std::nullopt;
    }
    auto it = tables_.find(object->class_name);
    if (it == tables_.end()) return std::nullopt;  // reported at declaration
    const ClassSymbolTable& other = it->second;
    const MemberInfo* info = other.Find(member.field);
    if (!info) {
      Error("S001",
            "class '" + object->class_name + "' has no member '" + member.field + "'",
            expr.span);
      return std::nullopt;
    }
    if (info->IsOperation()) {
      Error("S007",
            "'" + member.field + "' is an " +
                std::string(MemberKindName(info->kind)) +
                " and cannot be used as a value",
            expr.span);
      return std::nullopt;
    }
    if (!other.IsVisible(member.field) && object->class_name != cls_->name) {
      Error("S004",
            "member '" + member.field + "' of class '" + object->class_name +
                "' is not visible",
            expr.span);
    }
    if (context_ == Context::kAxiom && info->kind != MemberKind::kConstant) {
      Error("S008",
            "axiom refers to " + std::string(MemberKindName(info->kind)) + " '" +
                member.field + "'; axioms may only constrain constants",
            expr.span);
    }
    return FromTypeExpr(*info->type);
  }

  void CheckOpExpr(const syntax::OpExpr& expr) {
    if (const auto* binary = expr.As<syntax::OpBinary>()) {
      CheckOpExpr(*binary->lhs);
      CheckOpExpr(*binary->rhs);
      return;
    }
    if (const auto* ref = expr.As<syntax::OpRef>()) {
      const MemberInfo* info = table_->Find(ref->name);
      if (!info) {
        Error("S001", "unresolved operation '" + ref->name + "'", expr.span);
      } else if (!info->IsOperation()) {
        Error("S007",
              "'" + ref->name + "' is a " + std::string(MemberKindName(info->kind)) +
                  ", not an operation",
              expr.span);
      }
      return;
    }
    const auto* member = expr.As<syntax::OpMemberRef>();
    const MemberInfo* object = table_->Find(member->object);
    if (!object) {
      Error("S001", "unresolved name '" + member->object + "'", expr.span);
      return;
    }
    std::optional<std::string> class_name = table_->ObjectClass(member->object);
    if (!class_name || IsGeneric(*class_name)) {
      Error("S007", "'" + member->object + "' is not a member object", expr.span);
      return;
    }
    auto it = tables_.find(*class_name);
    if (it == tables_.end()) return;
    const MemberInfo* info = it->second.Find(member->name);
    if (!info) {
      Error("S001",
            "class '" + *class_name + "' has no operation '" + member->name + "'",
            expr.span);
    } else if (!info->IsOperation()) {
      Error("S007",
            "'" + member->name + "' of class '" + *class_name +
                "' is not an operation",
            expr.span);
    } else if (!it->second.IsVisible(member->name) && *class_name != cls_->name) {
      Error("S004",
            "operation '" + member->name + "' of class '" + *class_name +
                "' is not visible",
            expr.span);
    }
  }

  const syntax::Specification& spec_;
  const SymbolTables& tables_;
  std::vector<Diagnostic>& diagnostics_;
  const ClassDecl* cls_ = nullptr;
  const ClassSymbolTable* table_ = nullptr;
  const OperationSchema* op_ = nullptr;
  Context context_ = Context::kAxiom;
};

}  // namespace

ResolveResult Resolve(const syntax::Specification& spec) {
  ResolveResult result;
  for (const ClassDecl& cls : spec.classes) {
    if (result.tables.count(cls.name) > 0) {
      result.diagnostics.push_back(
          Diagnostic{"S003", Severity::kError,
                     "duplicate definition of class '" + cls.name + "'", cls.span});
      continue;
    }
    result.tables.emplace(cls.name, BuildSymbolTable(cls));
  }
  Resolver(spec, result.tables, result.diagnostics).Run();
  SortDiagnostics(result.diagnostics);
  return result;
}

}  // namespace ozc::sema
