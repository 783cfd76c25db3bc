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

#include "ozc/syntax/lexer.h"

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace ozc::syntax {
namespace {

std::vector<TokenKind> Kinds(const std::vector<Token>& tokens) {
  std::vector<TokenKind> kinds;
  for (const auto& t : tokens) kinds.push_back(t.kind);
  return kinds;
}

std::vector<std::string> Lexemes(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.lexeme);
  return out;
}

// Text covered by a single-line span, using 1-based columns.
std::string TextAt(const std::string& text, const SourceSpan& span) {
  size_t offset = 0;
  for (int line = 1; line < span.start.line; ++line) offset = text.find('\n', offset) + 1;
  return text.substr(offset + span.start.col - 1, span.end.col - span.start.col);
}

TEST(LexerTest, EmptyInputHasNoTokens) { EXPECT_TRUE(Tokenize("").empty()); }

TEST(LexerTest, ConstantDeclaration) {
  auto tokens = Tokenize("limit : NAT");
  EXPECT_EQ(Kinds(tokens),
            (std::vector{TokenKind::kIdent, TokenKind::kColon, TokenKind::kTypeName}));
  EXPECT_EQ(Lexemes(tokens), (std::vector<std::string>{"limit", ":", "NAT"}));
}

TEST(LexerTest, DecoratedInputIsOneToken) {
  auto tokens = Tokenize("amount? <= balance + limit");
  EXPECT_EQ(Lexemes(tokens),
            (std::vector<std::string>{"amount?", "<=", "balance", "+", "limit"}));
  EXPECT_EQ(tokens[0].kind, TokenKind::kIdent);
  EXPECT_EQ(tokens[1].kind, TokenKind::kLe);
}

TEST(LexerTest, PrimedAndOutputNames) {
  EXPECT_EQ(Lexemes(Tokenize("balance' = bal!")),
            (std::vector<std::string>{"balance'", "=", "bal!"}));
}

TEST(LexerTest, BangBeforeEqualsIsNotEqual) {
  auto tokens = Tokenize("c1!=c2");
  EXPECT_EQ(Lexemes(tokens), (std::vector<std::string>{"c1", "!=", "c2"}));
  EXPECT_EQ(tokens[1].kind, TokenKind::kNeq);
  EXPECT_EQ(Lexemes(Tokenize("x! = y")), (std::vector<std::string>{"x!", "=", "y"}));
}

TEST(LexerTest, OperationOperators) {
  EXPECT_EQ(Kinds(Tokenize("a [] b ; c || d & e")),
            (std::vector{TokenKind::kIdent, TokenKind::kChoice, TokenKind::kIdent,
                         TokenKind::kSemicolon, TokenKind::kIdent, TokenKind::kParallel,
                         TokenKind::kIdent, TokenKind::kAmp, TokenKind::kIdent}));
}

TEST(LexerTest, KeywordsAreReserved) {
  auto tokens = Tokenize("class op delta end in and or not implies div mod");
  EXPECT_EQ(Kinds(tokens),
            (std::vector{TokenKind::kClass, TokenKind::kOp, TokenKind::kDelta,
                         TokenKind::kEnd, TokenKind::kIn, TokenKind::kAnd, TokenKind::kOr,
                         TokenKind::kNot, TokenKind::kImplies, TokenKind::kDiv,
                         TokenKind::kMod}));
}

TEST(LexerTest, CommentsAreSkipped) {
  auto tokens = Tokenize("x -- a comment with [] and ?\ny");
  EXPECT_EQ(Kinds(tokens),
            (std::vector{TokenKind::kIdent, TokenKind::kNewline, TokenKind::kIdent}));
}

TEST(LexerTest, UnknownCharacterBecomesErrorToken) {
  auto tokens = Tokenize("a @ b");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].kind, TokenKind::kError);
  EXPECT_EQ(tokens[1].lexeme, "@");
}

TEST(LexerTest, MultibyteCharacterIsOneErrorToken) {
  auto tokens = Tokenize("x \xE2\x88\x88 S");  // U+2208 ELEMENT OF
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].kind, TokenKind::kError);
  EXPECT_EQ(tokens[1].lexeme, "\xE2\x88\x88");
}

TEST(LexerTest, SpansAreOneBasedHalfOpen) {
  auto tokens = Tokenize("class C\n  const k : NAT", "f.oz");
  EXPECT_EQ(tokens[0].span.file, "f.oz");
  EXPECT_EQ(tokens[0].span.start, (SourcePos{1, 1}));
  EXPECT_EQ(tokens[0].span.end, (SourcePos{1, 6}));
  EXPECT_EQ(tokens[3].lexeme, "const");
  EXPECT_EQ(tokens[3].span.start, (SourcePos{2, 3}));
}

// Every token's span covers exactly its lexeme, and lexemes appear in input
// order with only whitespace and comments between them.
TEST(LexerTest, LexemesReproduceInputAtTheirSpans) {
  const std::string text =
      "class CreditCard -- Figure 1\n"
      "  const limit : NAT\n"
      "  axiom limit in {1000, 2000, 3000}\n"
      "  op withdraw\n"
      "    delta balance\n"
      "    amount? : NAT\n"
      "  where\n"
      "    amount? <= balance + limit\n"
      "    balance' = balance - amount?\n"
      "  end\n"
      "end\n";
  for (const auto& token : Tokenize(text)) {
    if (token.kind == TokenKind::kNewline) continue;
    EXPECT_EQ(TextAt(text, token.span), token.lexeme) << token.span;
  }
}

TEST(LexerTest, RandomBytesNeverThrow) {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int round = 0; round < 500; ++round) {
    std::string text(static_cast<size_t>(round % 64), '\0');
    for (auto& c : text) c = static_cast<char>(byte(rng));
    EXPECT_NO_THROW(Tokenize(text));
  }
}

}  // namespace
}  // namespace ozc::syntax
