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

#ifndef OZC_SYNTAX_TOKEN_H_
#define OZC_SYNTAX_TOKEN_H_

#include <string>
#include <string_view>

#include "ozc/syntax/source_span.h"

namespace ozc::syntax {

enum class TokenKind {
  kIdent,     // possibly decorated: x, x', x?, x!
  kTypeName,  // NAT INT BOOL
  kInteger,
  // Keywords.
  kClass,
  kVisibility,
  kConst,
  kAxiom,
  kState,
  kSecondary,
  kWhere,
  kInit,
  kOp,
  kDelta,
  kEnd,
  kIn,
  kAnd,
  kOr,
  kNot,
  kImplies,
  kDiv,
  kMod,
  // Punctuation.
  kColon,
  kComma,
  kDot,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kChoice,     // []
  kSemicolon,  // ;
  kParallel,   // ||
  kAmp,        // &
  kPlus,
  kMinus,
  kStar,
  kEq,
  kNeq,
  kLt,
  kLe,
  kGt,
  kGe,
  kNewline,
  kError,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kError;
  std::string lexeme;
  SourceSpan span;

  bool Is(TokenKind k) const { return kind == k; }
};

}  // namespace ozc::syntax

#endif  // OZC_SYNTAX_TOKEN_H_
