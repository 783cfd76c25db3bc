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

#include "ozc/sema/checker.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace ozc::sema {
namespace {

using syntax::ClassDecl;
using syntax::Expr;

void AppendUnique(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& name : from) {
    if (std::find(into.begin(), into.end(), name) == into.end()) into.push_back(name);
  }
}

OpSignature Combine(syntax::OpOperator op, const OpSignature& lhs,
                    const OpSignature& rhs) {
  OpSignature out;
  out.inputs = lhs.inputs;
  switch (op) {
    case syntax::OpOperator::kChoice:
    case syntax::OpOperator::kConjunction:
      AppendUnique(out.inputs, rhs.inputs);
      break;
    case syntax::OpOperator::kSequential:
    case syntax::OpOperator::kParallel:
      for (const auto& in : rhs.inputs) {
        bool piped = std::find(lhs.outputs.begin(), lhs.outputs.end(), in) !=
                     lhs.outputs.end();
        if (!piped) AppendUnique(out.inputs, {in});
      }
      break;
  }
  out.outputs = lhs.outputs;
  AppendUnique(out.outputs, rhs.outputs);
  return out;
}

class Analyzer {
 public:
  explicit Analyzer(const syntax::Specification& spec) : spec_(spec) {}

  AnalysisResult Run() {
    ResolveResult resolved = Resolve(spec_);
    diagnostics_ = std::move(resolved.diagnostics);

    SemanticModel model;
    model.spec = &spec_;
    for (const ClassDecl& cls : spec_.classes) {
      if (decls_.count(cls.name) > 0) continue;  // S003 already reported
      decls_.emplace(cls.name, &cls);
      ClassModel cm;
      cm.decl = &cls;
      cm.table = resolved.tables.at(cls.name);
      for (const auto& op : cls.operations) {
        ClassifyResult classified = ClassifyOperation(op, cm.table);
        Append(classified.diagnostics);
        cm.operations.push_back(std::move(classified.op));
      }
      PlanResult plan = PlanSecondaryUpdates(cls, cm.table);
      Append(plan.diagnostics);
      cm.secondary = std::move(plan.plan);
      model.classes.push_back(std::move(cm));
    }
    tables_ = &resolved.tables;

    for (ClassModel& cm : model.classes) {
      std::set<std::string> stack;
      cm.constructor = Constructor(cm.decl->name, stack);
      for (const auto& op : cm.decl->operations) {
        OpSignature sig;
        for (const auto& in : op.inputs) sig.inputs.push_back(in.name);
        for (const auto& out : op.outputs) sig.outputs.push_back(out.name);
        cm.signatures[op.name] = std::move(sig);
      }
      for (const auto& def : cm.decl->op_expr_defs) {
        cm.signatures[def.name] = MemberSignature(cm.decl->name, def.name);
      }
    }

    SortDiagnostics(diagnostics_);
    diagnostics_.erase(
        std::unique(diagnostics_.begin(), diagnostics_.end(),
                    [](const Diagnostic& a, const Diagnostic& b) {
                      return std::tie(a.code, a.span, a.message) ==
                             std::tie(b.code, b.span, b.message);
                    }),
        diagnostics_.end());
    AnalysisResult result;
    if (!HasErrors(diagnostics_)) result.model = std::move(model);
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

 private:
  void Append(const std::vector<Diagnostic>& more) {
    diagnostics_.insert(diagnostics_.end(), more.begin(), more.end());
  }

  void Error(std::string code, std::string message, const SourceSpan& span) {
    diagnostics_.push_back(
        Diagnostic{std::move(code), Severity::kError, std::move(message), span});
  }

  const ClassDecl* FindDecl(const std::string& name) const {
    auto it = decls_.find(name);
    return it == decls_.end() ? nullptr : it->second;
  }

  const ClassSymbolTable* FindTable(const std::string& name) const {
    auto it = tables_->find(name);
    return it == tables_->end() ? nullptr : &it->second;
  }

  // --- constructors -----------------------------------------------------------

  ConstructorPlan Constructor(const std::string& class_name,
                              std::set<std::string>& stack) {
    if (auto it = ctors_.find(class_name); it != ctors_.end()) return it->second;
    ConstructorPlan plan;
    const ClassDecl* cls = FindDecl(class_name);
    const ClassSymbolTable* table = FindTable(class_name);
    if (!cls || !table) return plan;
    stack.insert(class_name);

    std::set<std::string> initialised;
    std::map<std::string, ConstructorPlan> members;
    if (cls->init) {
      for (const auto& pred : cls->init->preds) {
        InitStep(*cls, *table, pred, plan, initialised, members, stack);
      }
    }

    for (const auto& c : cls->constants) {
      if (!initialised.count(c.name)) {
        plan.params.push_back(
            CtorParam{c.name, CtorParam::Source::kConstant, c.name, "", c.type});
      }
    }
    if (cls->state) {
      for (const auto& v : cls->state->primary_vars) {
        if (auto it = members.find(v.name); it != members.end()) {
          for (const auto& inner : it->second.params) {
            plan.params.push_back(CtorParam{v.name + "_" + inner.name,
                                            CtorParam::Source::kForwarded, v.name,
                                            inner.name, inner.type});
          }
        } else if (!initialised.count(v.name)) {
          plan.params.push_back(
              CtorParam{v.name, CtorParam::Source::kStateVar, v.name, "", v.type});
        }
      }
    }
    std::set<std::string> names;
    for (const auto& p : plan.params) {
      if (!names.insert(p.name).second) {
        Error("S032",
              "constructor of '" + class_name + "' would take parameter '" + p.name +
                  "' twice; rename the member",
              cls->span);
      }
    }

    stack.erase(class_name);
    ctors_.emplace(class_name, plan);
    return plan;
  }

  void InitStep(const ClassDecl& cls, const ClassSymbolTable& table,
                const syntax::Predicate& pred, ConstructorPlan& plan,
                std::set<std::string>& initialised,
                std::map<std::string, ConstructorPlan>& members,
                std::set<std::string>& stack) {
    auto mark = [&](const std::string& name) {
      if (!initialised.insert(name).second) {
        Error("S031", "'" + name + "' is initialised more than once in '" +
                          cls.name + "'",
              pred->span);
        return false;
      }
      return true;
    };

    if (const auto* member = pred->As<syntax::MemberAccess>();
        member && member->field == "INIT") {
      const auto* object = member->object->As<syntax::NameRef>();
      std::optional<std::string> object_class =
          object ? table.ObjectClass(object->id) : std::nullopt;
      if (!object || !object_class) return;  // S006 from resolution
      if (!mark(object->id)) return;
      if (stack.count(*object_class) > 0) {
        Error("S005",
              "initialising '" + object->id + "' constructs '" + *object_class +
                  "' recursively",
              pred->span);
        return;
      }
      members[object->id] = Constructor(*object_class, stack);
      plan.actions.push_back(InitAction{InitAction::Kind::kConstructMember,
                                        object->id, nullptr, *object_class});
      return;
    }

    const auto* cmp = pred->As<syntax::Compare>();
    const auto* lhs = cmp && cmp->op == syntax::CompareOp::kEq
                          ? cmp->lhs->As<syntax::NameRef>()
                          : nullptr;
    const MemberInfo* info = lhs ? table.Find(lhs->id) : nullptr;
    if (lhs && !info && lhs->decoration == syntax::Decoration::kNone) {
      return;  // S001 from resolution
    }
    if (!lhs || !info || lhs->decoration != syntax::Decoration::kNone) {
      Error("S030",
            "INIT predicate must be 'variable = expression' or 'object.INIT'",
            pred->span);
      return;
    }
    if (info->kind == MemberKind::kSecondaryVar) {
      Error("S030",
            "secondary variable '" + lhs->id +
                "' is derived from the state and cannot be initialised",
            pred->span);
      return;
    }
    if (info->kind != MemberKind::kPrimaryVar && info->kind != MemberKind::kConstant) {
      Error("S030", "'" + lhs->id + "' cannot be initialised", pred->span);
      return;
    }
    if (!mark(lhs->id)) return;
    plan.actions.push_back(
        InitAction{InitAction::Kind::kAssign, lhs->id, cmp->rhs, ""});
  }

  // --- operation signatures ---------------------------------------------------

  OpSignature MemberSignature(const std::string& class_name, const std::string& name) {
    std::string key = class_name + "::" + name;
    if (auto it = signatures_.find(key); it != signatures_.end()) return it->second;
    const ClassDecl* cls = FindDecl(class_name);
    if (!cls) return {};
    for (const auto& op : cls->operations) {
      if (op.name != name) continue;
      OpSignature sig;
      for (const auto& in : op.inputs) sig.inputs.push_back(in.name);
      for (const auto& out : op.outputs) sig.outputs.push_back(out.name);
      return sig;
    }
    for (const auto& def : cls->op_expr_defs) {
      if (def.name != name) continue;
      if (!visiting_.insert(key).second) {
        Error("S016",
              "operation expression '" + name + "' of '" + class_name +
                  "' refers to itself",
              def.span);
        return {};
      }
      OpSignature sig = ExprSignature(class_name, *def.expr);
      visiting_.erase(key);
      signatures_.emplace(key, sig);
      return sig;
    }
    return {};
  }

  OpSignature ExprSignature(const std::string& class_name, const syntax::OpExpr& expr) {
    if (const auto* ref = expr.As<syntax::OpRef>()) {
      return MemberSignature(class_name, ref->name);
    }
    if (const auto* member = expr.As<syntax::OpMemberRef>()) {
      const ClassSymbolTable* table = FindTable(class_name);
      std::optional<std::string> object_class =
          table ? table->ObjectClass(member->object) : std::nullopt;
      return object_class ? MemberSignature(*object_class, member->name)
                          : OpSignature{};
    }
    const auto& binary = std::get<syntax::OpBinary>(expr.node);
    return Combine(binary.op, ExprSignature(class_name, *binary.lhs),
                   ExprSignature(class_name, *binary.rhs));
  }

  const syntax::Specification& spec_;
  std::vector<Diagnostic> diagnostics_;
  std::map<std::string, const ClassDecl*> decls_;
  const SymbolTables* tables_ = nullptr;
  std::map<std::string, ConstructorPlan> ctors_;
  std::map<std::string, OpSignature> signatures_;
  std::set<std::string> visiting_;
};

}  // namespace

const ClassModel* SemanticModel::FindClass(std::string_view name) const {
  for (const auto& cm : classes) {
    if (cm.decl->name == name) return &cm;
  }
  return nullptr;
}

AnalysisResult Analyze(const syntax::Specification& spec) {
  return Analyzer(spec).Run();
}

std::vector<Diagnostic> CheckSpecification(const syntax::Specification& spec) {
  return Analyze(spec).diagnostics;
}

}  // namespace ozc::sema
