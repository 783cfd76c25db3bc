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

#include "ozc/sema/symbol_table.h"

#include <algorithm>
#include <array>

namespace ozc::sema {

using syntax::TypeExpr;

std::string_view MemberKindName(MemberKind kind) {
  switch (kind) {
    case MemberKind::kConstant: return "constant";
    case MemberKind::kPrimaryVar: return "state variable";
    case MemberKind::kSecondaryVar: return "secondary variable";
    case MemberKind::kOperation: return "operation";
    case MemberKind::kOpExprDef: return "operation expression";
  }
  return "member";
}

const MemberInfo* ClassSymbolTable::Find(std::string_view name) const {
  auto it = members.find(std::string(name));
  return it == members.end() ? nullptr : &it->second;
}

bool ClassSymbolTable::IsVisible(std::string_view name) const {
  return !has_visibility_list || visibility_set.count(std::string(name)) > 0;
}

std::optional<std::string> ClassSymbolTable::ObjectClass(
    std::string_view name) const {
  const MemberInfo* info = Find(name);
  if (!info || !info->type || info->type->kind != TypeExpr::Kind::kClassRef) {
    return std::nullopt;
  }
  return info->type->class_name;
}

ClassSymbolTable BuildSymbolTable(const syntax::ClassDecl& cls) {
  ClassSymbolTable table;
  table.class_name = cls.name;
  // First declaration wins; duplicates were already reported as P003.
  auto add = [&](const std::string& name, MemberKind kind,
                 std::optional<TypeExpr> type, const SourceSpan& span) {
    table.members.emplace(name, MemberInfo{kind, std::move(type), span});
  };
  auto add_object = [&](const syntax::VarDecl& decl) {
    if (decl.type.kind == TypeExpr::Kind::kClassRef) {
      table.member_object_fields.emplace_back(decl.name, decl.type.class_name);
    }
  };
  for (const auto& c : cls.constants) {
    add(c.name, MemberKind::kConstant, c.type, c.span);
    add_object(c);
  }
  if (cls.state) {
    for (const auto& v : cls.state->primary_vars) {
      add(v.name, MemberKind::kPrimaryVar, v.type, v.span);
      add_object(v);
    }
    for (const auto& v : cls.state->secondary_vars) {
      add(v.name, MemberKind::kSecondaryVar, v.type, v.span);
      add_object(v);
    }
  }
  for (const auto& op : cls.operations) {
    add(op.name, MemberKind::kOperation, std::nullopt, op.span);
  }
  for (const auto& def : cls.op_expr_defs) {
    add(def.name, MemberKind::kOpExprDef, std::nullopt, def.span);
  }
  if (cls.visibility) {
    table.has_visibility_list = true;
    for (const auto& entry : *cls.visibility) {
      table.visibility_set.insert(entry.name);
    }
  }
  return table;
}

bool IsReservedIdentifier(std::string_view name) {
  static constexpr std::array<std::string_view, 51> kReserved = {
      // Python keywords not already dialect keywords.
      "False", "None", "True", "as", "assert", "async", "await", "break",
      "continue", "def", "del", "elif", "else", "except", "finally", "for",
      "from", "global", "if", "import", "is", "lambda", "nonlocal", "pass",
      "raise", "return", "try", "while", "with", "yield",
      // Names the generated module defines or binds.
      "self", "old", "result", "instance", "kwargs",
      "object", "isinstance", "frozenset", "Nat", "Int", "pre", "post",
      "pos", "inv", "decorate_all", "choice", "sequential", "parallel",
      "conjunction", "FrozenConstantViolation", "INIT"};
  return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

}  // namespace ozc::sema
