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

#ifndef OZC_SYNTAX_PARSER_H_
#define OZC_SYNTAX_PARSER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ozc/diagnostic.h"
#include "ozc/syntax/ast.h"
#include "ozc/syntax/token.h"

namespace ozc::syntax {

/// Either a specification or the reasons there is none. `spec` is set iff
/// `diagnostics` holds no errors.
struct ParseResult {
  std::optional<Specification> spec;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return spec.has_value(); }
};

/// Maximum nesting of parentheses/operators before P005 is reported.
inline constexpr int kMaxNesting = 200;

/// Recursive-descent parser for the dialect. Total: malformed input yields
/// diagnostics, never an exception or crash. Recovery resumes at the next
/// line so several independent errors are reported in one pass.
ParseResult Parse(const std::vector<Token>& tokens, const std::string& file);

/// Tokenize + Parse.
ParseResult ParseSource(std::string_view text, const std::string& file = "");

}  // namespace ozc::syntax

#endif  // OZC_SYNTAX_PARSER_H_
