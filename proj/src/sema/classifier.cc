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

#include "ozc/sema/classifier.h"

#include <algorithm>
#include <set>

namespace ozc::sema {
namespace {

using syntax::Decoration;
using syntax::Expr;

bool HasPrimedOrOutput(const Expr& expr) {
  return syntax::MentionsDecoration(expr, Decoration::kPrimed) ||
         syntax::MentionsDecoration(expr, Decoration::kOutput);
}

// `name<decoration> = rhs` where rhs mentions no primed or output names.
const syntax::NameRef* DefiningEquality(const Expr& pred, Decoration decoration,
                                        syntax::ExprPtr* rhs) {
  const auto* cmp = pred.As<syntax::Compare>();
  if (!cmp || cmp->op != syntax::CompareOp::kEq) return nullptr;
  const auto* lhs = cmp->lhs->As<syntax::NameRef>();
  if (!lhs || lhs->decoration != decoration) return nullptr;
  if (HasPrimedOrOutput(*cmp->rhs)) return nullptr;
  *rhs = cmp->rhs;
  return lhs;
}

bool MentionsOutput(const Expr& expr, const std::string& output) {
  bool found = false;
  syntax::ForEachExpr(expr, [&](const Expr& e) {
    const auto* name = e.As<syntax::NameRef>();
    if (name && name->decoration == Decoration::kOutput && name->id == output) {
      found = true;
    }
  });
  return found;
}

}  // namespace

ClassifyResult ClassifyOperation(const syntax::OperationSchema& op,
                                 const ClassSymbolTable& table) {
  ClassifyResult result;
  ClassifiedOperation& out = result.op;
  out.name = op.name;
  out.inputs = op.inputs;
  out.outputs = op.outputs;
  out.span = op.span;

  auto error = [&](std::string code, std::string message, const SourceSpan& span) {
    result.diagnostics.push_back(
        Diagnostic{std::move(code), Severity::kError, std::move(message), span});
  };
  auto warn = [&](std::string code, std::string message, const SourceSpan& span) {
    result.diagnostics.push_back(
        Diagnostic{std::move(code), Severity::kWarning, std::move(message), span});
  };

  std::set<std::string> delta;
  std::set<std::string> written;  // raw delta entries, valid or not
  for (const auto& entry : op.delta) {
    if (!written.insert(entry.name).second) {
      error("S010", "'" + entry.name + "' is listed twice in the delta list",
            entry.span);
      continue;
    }
    const MemberInfo* info = table.Find(entry.name);
    if (!info) {
      error("S010", "delta entry '" + entry.name + "' is not a state variable",
            entry.span);
    } else if (info->kind != MemberKind::kPrimaryVar) {
      error("S010",
            "delta entry '" + entry.name + "' is a " +
                std::string(MemberKindName(info->kind)) +
                "; only primary state variables may change",
            entry.span);
    } else {
      delta.insert(entry.name);
      out.delta.push_back(entry.name);
    }
  }

  for (const auto& pred : op.preds) {
    syntax::ForEachExpr(*pred, [&](const Expr& e) {
      const auto* name = e.As<syntax::NameRef>();
      if (!name || name->decoration != Decoration::kPrimed) return;
      if (written.count(name->id) == 0 && table.Find(name->id)) {
        error("S011",
              "'" + name->id + "'' changes but '" + name->id +
                  "' is not in the delta list of '" + op.name + "'",
              e.span);
      }
    });
  }

  std::set<std::string> assigned;
  for (const auto& pred : op.preds) {
    if (!HasPrimedOrOutput(*pred)) {
      out.pre_preds.push_back(pred);
      continue;
    }
    syntax::ExprPtr rhs;
    const syntax::NameRef* target = DefiningEquality(*pred, Decoration::kPrimed, &rhs);
    if (target && delta.count(target->id) > 0 && !assigned.count(target->id)) {
      assigned.insert(target->id);
      out.body_assignments.push_back(BodyAssignment{target->id, rhs, pred});
      continue;
    }
    out.post_preds.push_back(pred);
  }

  std::set<std::string> bound;
  for (const auto& pred : out.post_preds) {
    syntax::ExprPtr rhs;
    const syntax::NameRef* output = DefiningEquality(*pred, Decoration::kOutput, &rhs);
    if (output && bound.insert(output->id).second) {
      out.output_bindings.push_back(OutputBinding{output->id, rhs});
    }
  }
  for (const auto& decl : op.outputs) {
    if (bound.count(decl.name) > 0) continue;
    bool mentioned = std::any_of(op.preds.begin(), op.preds.end(),
                                 [&](const auto& p) { return MentionsOutput(*p, decl.name); });
    if (!mentioned) {
      warn("S012", "output '" + decl.name + "!' is never constrained", decl.span);
    } else {
      warn("S013",
           "output '" + decl.name +
               "!' has no defining equality; the generated method returns None for it",
           decl.span);
    }
  }

  std::vector<std::pair<SourcePos, std::string>> primaries;
  for (const auto& [name, info] : table.members) {
    if (info.kind == MemberKind::kPrimaryVar) primaries.emplace_back(info.span.start, name);
  }
  std::sort(primaries.begin(), primaries.end());
  for (const auto& [pos, name] : primaries) {
    if (!delta.count(name)) out.frame_vars.push_back(name);
  }
  return result;
}

}  // namespace ozc::sema
