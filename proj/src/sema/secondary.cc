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

#include "ozc/sema/secondary.h"

#include <algorithm>
#include <map>

namespace ozc::sema {
namespace {

using syntax::Expr;

// Collects plain names and `obj.field` paths in first-occurrence order.
void CollectReads(const Expr& expr, std::vector<std::string>& reads) {
  auto add = [&](std::string name) {
    if (std::find(reads.begin(), reads.end(), name) == reads.end()) {
      reads.push_back(std::move(name));
    }
  };
  if (const auto* name = expr.As<syntax::NameRef>()) {
    add(name->id);
    return;
  }
  if (const auto* member = expr.As<syntax::MemberAccess>()) {
    if (const auto* object = member->object->As<syntax::NameRef>()) {
      add(object->id + "." + member->field);
      return;
    }
    CollectReads(*member->object, reads);
    return;
  }
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, syntax::SetLiteral>) {
          for (const auto& e : node.elements) CollectReads(*e, reads);
        } else if constexpr (std::is_same_v<T, syntax::Arith> ||
                             std::is_same_v<T, syntax::Compare>) {
          CollectReads(*node.lhs, reads);
          CollectReads(*node.rhs, reads);
        } else if constexpr (std::is_same_v<T, syntax::Membership>) {
          CollectReads(*node.element, reads);
          CollectReads(*node.set, reads);
        } else if constexpr (std::is_same_v<T, syntax::Logic>) {
          for (const auto& e : node.operands) CollectReads(*e, reads);
        }
      },
      expr.node);
}

}  // namespace

bool SecondaryUpdatePlan::IsDefining(const syntax::Predicate& pred) const {
  return std::any_of(definitions.begin(), definitions.end(),
                     [&](const SecondaryDefinition& d) { return d.source == pred; });
}

PlanResult PlanSecondaryUpdates(const syntax::ClassDecl& cls,
                                const ClassSymbolTable& table) {
  PlanResult result;
  if (!cls.state || cls.state->secondary_vars.empty()) return result;

  std::map<std::string, SecondaryDefinition> found;
  for (const auto& pred : cls.state->invariant_preds) {
    const auto* cmp = pred->As<syntax::Compare>();
    if (!cmp || cmp->op != syntax::CompareOp::kEq) continue;
    const auto* lhs = cmp->lhs->As<syntax::NameRef>();
    if (!lhs || lhs->decoration != syntax::Decoration::kNone) continue;
    const MemberInfo* info = table.Find(lhs->id);
    if (!info || info->kind != MemberKind::kSecondaryVar) continue;
    if (found.count(lhs->id) > 0) {
      result.diagnostics.push_back(Diagnostic{
          "S021", Severity::kError,
          "secondary variable '" + lhs->id + "' has more than one defining equality",
          pred->span});
      continue;
    }
    SecondaryDefinition def{lhs->id, cmp->rhs, pred, {}};
    CollectReads(*cmp->rhs, def.reads);
    for (const auto& read : def.reads) {
      const MemberInfo* read_info = table.Find(read);
      if (read_info && read_info->kind == MemberKind::kSecondaryVar) {
        result.diagnostics.push_back(Diagnostic{
            "S022", Severity::kError,
            "definition of secondary variable '" + lhs->id +
                "' reads secondary variable '" + read + "'",
            pred->span});
      }
    }
    found.emplace(lhs->id, std::move(def));
  }

  for (const auto& var : cls.state->secondary_vars) {
    auto it = found.find(var.name);
    if (it == found.end()) {
      result.diagnostics.push_back(Diagnostic{
          "S020", Severity::kError,
          "secondary variable '" + var.name +
              "' has no defining equality '" + var.name + " = ...' in the state schema",
          var.span});
      continue;
    }
    result.plan.definitions.push_back(it->second);
  }
  return result;
}

}  // namespace ozc::sema
