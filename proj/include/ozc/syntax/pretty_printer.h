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

#ifndef OZC_SYNTAX_PRETTY_PRINTER_H_
#define OZC_SYNTAX_PRETTY_PRINTER_H_

#include <string>

#include "ozc/syntax/ast.h"

namespace ozc::syntax {

/// Canonical dialect text for `spec`: two-space indentation, sections in the
/// order visibility, const, axiom, state, init, op schemas, op definitions.
/// Re-parsing the result yields a tree equal to `spec` modulo spans.
std::string PrettyPrint(const Specification& spec);

/// Minimal-parenthesis rendering of one predicate or expression.
std::string PrettyPrintExpr(const Expr& expr);

std::string PrettyPrintOpExpr(const OpExpr& expr);

}  // namespace ozc::syntax

#endif  // OZC_SYNTAX_PRETTY_PRINTER_H_
