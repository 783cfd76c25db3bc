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

#ifndef OZC_CODEGEN_PYTHON_EXPR_H_
#define OZC_CODEGEN_PYTHON_EXPR_H_

#include <map>
#include <string>
#include <string_view>

#include "ozc/sema/checker.h"
#include "ozc/syntax/ast.h"

namespace ozc::codegen {

/// How decorated and undecorated names are spelled in one Python context.
struct PyContext {
  const sema::SemanticModel* model = nullptr;
  const sema::ClassModel* cls = nullptr;  // class the expression belongs to
  std::string old_receiver = "self";      // unprimed state and constants
  std::string new_receiver = "self";      // primed state
  /// Whether the text is placed lexically inside the class body, where
  /// Python mangles `__name` on its own.
  bool inside_class = true;
  /// Output spelling: empty means bare local names; otherwise `result` for a
  /// single output or `result["x"]` when the operation has several.
  std::string result_name;
  bool multiple_outputs = false;
  /// Declared types of the operation's inputs and outputs.
  std::map<std::string, syntax::TypeExpr> locals;
};

/// Attribute spelling of member `name` of class `owner` as seen from `ctx`:
/// the bare name when visible, `__name` inside the owner's body, and
/// `_Owner__name` elsewhere.
std::string AttributeName(const sema::ClassModel& owner, std::string_view name,
                          const PyContext& ctx);

/// Renders a predicate or expression as a Python expression.
std::string RenderPythonExpr(const syntax::Expr& expr, const PyContext& ctx);

/// Python string literal (double quoted) for ASCII text.
std::string PythonString(std::string_view text);

}  // namespace ozc::codegen

#endif  // OZC_CODEGEN_PYTHON_EXPR_H_
