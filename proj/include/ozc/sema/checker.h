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

#ifndef OZC_SEMA_CHECKER_H_
#define OZC_SEMA_CHECKER_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ozc/diagnostic.h"
#include "ozc/sema/classifier.h"
#include "ozc/sema/secondary.h"
#include "ozc/sema/symbol_table.h"
#include "ozc/syntax/ast.h"

namespace ozc::sema {

/// Communication variables of an operation or operation expression, by base
/// name. For composites: choice and conjunction take unions; sequential and
/// parallel composition hide the second operand's inputs that the first
/// operand's outputs feed.
struct OpSignature {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

/// One constructor parameter of a generated class.
struct CtorParam {
  enum class Source {
    kConstant,   // constant not fixed by INIT
    kStateVar,   // primary variable not fixed by INIT
    kForwarded,  // parameter of a member object built by `obj.INIT`
  };
  std::string name;    // parameter name in the generated constructor
  Source source;
  std::string member;  // the constant, variable or member object
  std::string inner;   // kForwarded: parameter name in the member's class
  syntax::TypeExpr type;
};

/// One step of the generated constructor, after parameters are stored.
struct InitAction {
  enum class Kind { kAssign, kConstructMember };
  Kind kind;
  std::string target;
  syntax::ExprPtr rhs;     // kAssign
  std::string class_name;  // kConstructMember
};

struct ConstructorPlan {
  std::vector<CtorParam> params;
  std::vector<InitAction> actions;
};

struct ClassModel {
  const syntax::ClassDecl* decl = nullptr;
  ClassSymbolTable table;
  std::vector<ClassifiedOperation> operations;  // source order
  SecondaryUpdatePlan secondary;
  ConstructorPlan constructor;
  std::map<std::string, OpSignature> signatures;  // schemas and op defs
};

/// Everything code generation needs. Borrows from the Specification it was
/// built from, which must outlive it.
struct SemanticModel {
  const syntax::Specification* spec = nullptr;
  std::vector<ClassModel> classes;  // source order

  const ClassModel* FindClass(std::string_view name) const;
};

struct AnalysisResult {
  std::optional<SemanticModel> model;  // set iff no errors
  std::vector<Diagnostic> diagnostics;
};

/// Runs resolution, operation classification, secondary-variable planning,
/// INIT checks and operation-expression checks over every class.
///
/// Extra errors: S005 member INIT cycle, S016 cyclic operation expression,
/// S030 INIT predicate that is neither `var = expr` nor `obj.INIT`,
/// S031 variable initialised twice, S032 constructor parameter clash.
AnalysisResult Analyze(const syntax::Specification& spec);

/// Diagnostics from Analyze, sorted by (file, span, code). The
/// specification is accepted iff none of them is an error.
std::vector<Diagnostic> CheckSpecification(const syntax::Specification& spec);

}  // namespace ozc::sema

#endif  // OZC_SEMA_CHECKER_H_
