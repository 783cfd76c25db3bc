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

#ifndef OZC_SEMA_SECONDARY_H_
#define OZC_SEMA_SECONDARY_H_

#include <string>
#include <vector>

#include "ozc/diagnostic.h"
#include "ozc/sema/symbol_table.h"
#include "ozc/syntax/ast.h"

namespace ozc::sema {

struct SecondaryDefinition {
  std::string var;
  syntax::ExprPtr rhs;
  syntax::Predicate source;  // the defining state invariant
  /// Names read by `rhs`: plain members ("limit") and member paths
  /// ("c1.balance"), first-occurrence order, no repeats.
  std::vector<std::string> reads;
};

/// How each secondary variable is recomputed, in declaration order.
struct SecondaryUpdatePlan {
  std::vector<SecondaryDefinition> definitions;

  bool empty() const { return definitions.empty(); }
  /// True if `pred` is one of the defining equalities (compared by identity).
  bool IsDefining(const syntax::Predicate& pred) const;
};

struct PlanResult {
  SecondaryUpdatePlan plan;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !HasErrors(diagnostics); }
};

/// Finds, for each secondary variable `s`, the state invariant `s = expr`
/// that defines it.
///
/// Errors: S020 no defining equality, S021 more than one, S022 the
/// defining expression reads another secondary variable.
PlanResult PlanSecondaryUpdates(const syntax::ClassDecl& cls,
                                const ClassSymbolTable& table);

}  // namespace ozc::sema

#endif  // OZC_SEMA_SECONDARY_H_
