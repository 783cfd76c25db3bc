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

#include <array>
#include <utility>

namespace ozc::syntax {

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kTypeName: return "type name";
    case TokenKind::kInteger: return "integer";
    case TokenKind::kClass: return "'class'";
    case TokenKind::kVisibility: return "'visibility'";
    case TokenKind::kConst: return "'const'";
    case TokenKind::kAxiom: return "'axiom'";
    case TokenKind::kState: return "'state'";
    case TokenKind::kSecondary: return "'secondary'";
    case TokenKind::kWhere: return "'where'";
    case TokenKind::kInit: return "'init'";
    case TokenKind::kOp: return "'op'";
    case TokenKind::kDelta: return "'delta'";
    case TokenKind::kEnd: return "'end'";
    case TokenKind::kIn: return "'in'";
    case TokenKind::kAnd: return "'and'";
    case TokenKind::kOr: return "'or'";
    case TokenKind::kNot: return "'not'";
    case TokenKind::kImplies: return "'implies'";
    case TokenKind::kDiv: return "'div'";
    case TokenKind::kMod: return "'mod'";
    case TokenKind::kColon: return "':'";
    case TokenKind::kComma: return "','";
    case TokenKind::kDot: return "'.'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kLBracket: return "'['";
    case TokenKind::kRBracket: return "']'";
    case TokenKind::kChoice: return "'[]'";
    case TokenKind::kSemicolon: return "';'";
    case TokenKind::kParallel: return "'||'";
    case TokenKind::kAmp: return "'&'";
    case TokenKind::kPlus: return "'+'";
    case TokenKind::kMinus: return "'-'";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kEq: return "'='";
    case TokenKind::kNeq: return "'!='";
    case TokenKind::kLt: return "'<'";
    case TokenKind::kLe: return "'<='";
    case TokenKind::kGt: return "'>'";
    case TokenKind::kGe: return "'>='";
    case TokenKind::kNewline: return "end of line";
    case TokenKind::kError: return "invalid character";
  }
  return "token";
}

namespace {

constexpr std::array<std::pair<std::string_view, TokenKind>, 21> kWords = {{
    {"class", TokenKind::kClass},     {"visibility", TokenKind::kVisibility},
    {"const", TokenKind::kConst},     {"axiom", TokenKind::kAxiom},
    {"state", TokenKind::kState},     {"secondary", TokenKind::kSecondary},
    {"where", TokenKind::kWhere},     {"init", TokenKind::kInit},
    {"op", TokenKind::kOp},           {"delta", TokenKind::kDelta},
    {"end", TokenKind::kEnd},         {"in", TokenKind::kIn},
    {"and", TokenKind::kAnd},         {"or", TokenKind::kOr},
    {"not", TokenKind::kNot},         {"implies", TokenKind::kImplies},
    {"div", TokenKind::kDiv},         {"mod", TokenKind::kMod},
    {"NAT", TokenKind::kTypeName},    {"INT", TokenKind::kTypeName},
    {"BOOL", TokenKind::kTypeName},
}};

bool IsAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view text, const std::string& file)
      : text_(text), file_(file) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        Advance(1);
        continue;
      }
      if (c == '-' && Peek(1) == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance(1);
        continue;
      }
      tokens.push_back(Next());
    }
    return tokens;
  }

 private:
  char Peek(size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance(size_t n) {
    for (size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  Token Make(TokenKind kind, size_t length) {
    Token token;
    token.kind = kind;
    token.lexeme = std::string(text_.substr(pos_, length));
    token.span.file = file_;
    token.span.start = {line_, col_};
    Advance(length);
    token.span.end = {line_, col_};
    return token;
  }

  Token Next() {
    char c = text_[pos_];
    if (IsAlpha(c)) return Word();
    if (IsDigit(c)) {
      size_t n = 0;
      while (IsDigit(Peek(n))) ++n;
      return Make(TokenKind::kInteger, n);
    }
    switch (c) {
      case '\n': return Make(TokenKind::kNewline, 1);
      case ':': return Make(TokenKind::kColon, 1);
      case ',': return Make(TokenKind::kComma, 1);
      case '.': return Make(TokenKind::kDot, 1);
      case '(': return Make(TokenKind::kLParen, 1);
      case ')': return Make(TokenKind::kRParen, 1);
      case '{': return Make(TokenKind::kLBrace, 1);
      case '}': return Make(TokenKind::kRBrace, 1);
      case '[':
        if (Peek(1) == ']') return Make(TokenKind::kChoice, 2);
        return Make(TokenKind::kLBracket, 1);
      case ']': return Make(TokenKind::kRBracket, 1);
      case ';': return Make(TokenKind::kSemicolon, 1);
      case '|':
        if (Peek(1) == '|') return Make(TokenKind::kParallel, 2);
        return Make(TokenKind::kError, 1);
      case '&': return Make(TokenKind::kAmp, 1);
      case '+': return Make(TokenKind::kPlus, 1);
      case '-': return Make(TokenKind::kMinus, 1);
      case '*': return Make(TokenKind::kStar, 1);
      case '=': return Make(TokenKind::kEq, 1);
      case '!':
        if (Peek(1) == '=') return Make(TokenKind::kNeq, 2);
        return Make(TokenKind::kError, 1);
      case '<':
        if (Peek(1) == '=') return Make(TokenKind::kLe, 2);
        return Make(TokenKind::kLt, 1);
      case '>':
        if (Peek(1) == '=') return Make(TokenKind::kGe, 2);
        return Make(TokenKind::kGt, 1);
      default:
        break;
    }
    // Keep a multi-byte UTF-8 sequence together in one error token.
    size_t n = 1;
    if (static_cast<unsigned char>(c) >= 0xC0) {
      while (n < 4 && (static_cast<unsigned char>(Peek(n)) & 0xC0) == 0x80) ++n;
    }
    return Make(TokenKind::kError, n);
  }

  Token Word() {
    size_t n = 0;
    while (IsAlpha(Peek(n)) || IsDigit(Peek(n)) || Peek(n) == '_') ++n;
    std::string_view word = text_.substr(pos_, n);
    for (const auto& [spelling, kind] : kWords) {
      if (word == spelling) return Make(kind, n);
    }
    char next = Peek(n);
    if (next == '\'' || next == '?' || (next == '!' && Peek(n + 1) != '=')) {
      ++n;
    }
    return Make(TokenKind::kIdent, n);
  }

  std::string_view text_;
  const std::string& file_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> Tokenize(std::string_view text, const std::string& file) {
  return Lexer(text, file).Run();
}

}  // namespace ozc::syntax
