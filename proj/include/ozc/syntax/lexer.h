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

#ifndef OZC_SYNTAX_LEXER_H_
#define OZC_SYNTAX_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "ozc/syntax/token.h"

namespace ozc::syntax {

/// Splits dialect source into tokens. Spaces, tabs, carriage returns and
/// `--` comments are skipped; line breaks become kNewline tokens. Lexing
/// never fails: bytes that start no token become kError tokens and are left
/// for the parser to report.
///
/// Decorations are part of the identifier: `balance'`, `amount?`, `bal!`.
/// A `!` directly followed by `=` is read as the `!=` operator instead.
std::vector<Token> Tokenize(std::string_view text, const std::string& file = "");

}  // namespace ozc::syntax

#endif  // OZC_SYNTAX_LEXER_H_
