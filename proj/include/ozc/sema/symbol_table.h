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

#ifndef OZC_SEMA_SYMBOL_TABLE_H_
#define OZC_SEMA_SYMBOL_TABLE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ozc/diagnostic.h"
#include "ozc/syntax/ast.h"

namespace ozc::sema {

enum class MemberKind {
  kConstant,
  kPrimaryVar,
  kSecondaryVar,
  kOperation,
  kOpExprDef,
};

std::string_view MemberKindName(MemberKind kind);

struct MemberInfo {
  MemberKind kind;
  std::optional<syntax::TypeExpr> type;  // unset for operations
  SourceSpan span;

  bool IsStateVar() const {
    return kind == MemberKind::kPrimaryVar || kind == MemberKind::kSecondaryVar;
  }
  bool IsValue() const { return kind == MemberKind::kConstant || IsStateVar(); }
  bool IsOperation() const {
    return kind == MemberKind::kOperation || kind == MemberKind::kOpExprDef;
  }
};

/// Names declared by one class. Without a visibility list every member is
/// public; with one, only the listed members are.
struct ClassSymbolTable {
  std::string class_name;
  std::map<std::string, MemberInfo> members;
  bool has_visibility_list = false;
  std::set<std::string> visibility_set;
  /// Class-typed state variables and constants: (field, class name), in
  /// declaration order.
  std::vector<std::pair<std::string, std::string>> member_object_fields;

  const MemberInfo* Find(std::string_view name) const;
  bool IsVisible(std::string_view name) const;
  /// Class name of a class-typed member, if `name` is one.
  std::optional<std::string> ObjectClass(std::string_view name) const;
};

using SymbolTables = std::map<std::string, ClassSymbolTable, std::less<>>;

/// Collects the members of `cls` without checking anything.
ClassSymbolTable BuildSymbolTable(const syntax::ClassDecl& cls);

struct ResolveResult {
  SymbolTables tables;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !HasErrors(diagnostics); }
};

/// Builds one table per class and binds every identifier used in axioms,
/// state predicates, INIT predicates, operation predicates and operation
/// expressions. Also performs the best-effort type checks (S040).
///
/// Errors: S001 unresolved name, S002 visibility entry names no member,
/// S003 duplicate class, S004 non-visible member of another class,
/// S006 misplaced INIT reference, S007 wrong member kind, S008 axiom
/// mentioning a non-constant, S009 reserved identifier, S040 type mismatch.
ResolveResult Resolve(const syntax::Specification& spec);

/// Identifiers that would collide with Python keywords or with names the
/// generated code relies on.
bool IsReservedIdentifier(std::string_view name);

}  // namespace ozc::sema

#endif  // OZC_SEMA_SYMBOL_TABLE_H_
