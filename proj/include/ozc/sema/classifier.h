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

#ifndef OZC_SEMA_CLASSIFIER_H_
#define OZC_SEMA_CLASSIFIER_H_

#include <string>
#include <vector>

#include "ozc/diagnostic.h"
#include "ozc/sema/symbol_table.h"
#include "ozc/syntax/ast.h"

namespace ozc::sema {

/// `target' = rhs`, executed as `target := rhs` against the pre-state.
struct BodyAssignment {
  std::string target;
  syntax::ExprPtr rhs;
  syntax::Predicate source;
};

/// `out! = rhs`: the value returned for `out`, computed from the pre-state.
struct OutputBinding {
  std::string output;
  syntax::ExprPtr rhs;
};

/// An operation schema with every predicate placed in exactly one of
/// pre_preds, body_assignments or post_preds.
struct ClassifiedOperation {
  std::string name;
  std::vector<std::string> delta;
  std::vector<syntax::VarDecl> inputs;
  std::vector<syntax::VarDecl> outputs;
  std::vector<syntax::Predicate> pre_preds;
  std::vector<BodyAssignment> body_assignments;
  std::vector<syntax::Predicate> post_preds;
  /// Not a fourth partition: output equalities stay in post_preds and are
  /// additionally used to construct the return value.
  std::vector<OutputBinding> output_bindings;
  /// Primary state variables outside the delta list, declaration order.
  std::vector<std::string> frame_vars;
  SourceSpan span;
};

struct ClassifyResult {
  ClassifiedOperation op;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !HasErrors(diagnostics); }
};

/// Sorts each predicate of `op`, in source order, by the first rule that
/// applies:
///   (a) no primed and no output names           -> precondition
///   (b) `v' = rhs`, v in delta, rhs free of primed
///       and output names, v' not yet assigned     -> body assignment
///   (c) anything else                             -> postcondition
///
/// Errors: S010 delta entry that is not a primary state variable (or is
/// repeated), S011 primed name outside the delta list. Warnings: S012 output
/// never mentioned, S013 output without a defining equality.
ClassifyResult ClassifyOperation(const syntax::OperationSchema& op,
                                 const ClassSymbolTable& table);

}  // namespace ozc::sema

#endif  // OZC_SEMA_CLASSIFIER_H_
