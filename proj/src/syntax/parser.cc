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

#include "ozc/syntax/parser.h"

#include <algorithm>
#include <map>
#include <utility>

#include "ozc/syntax/lexer.h"

namespace ozc::syntax {
namespace {

// Thrown to unwind to the nearest line-level recovery point. The diagnostic
// has already been recorded.
struct SyntaxError {};

enum class PredContext { kAxiom, kState, kInit, kOperation };

std::pair<std::string, Decoration> SplitDecoration(std::string_view lexeme) {
  if (!lexeme.empty()) {
    switch (lexeme.back()) {
      case '\'':
        return {std::string(lexeme.substr(0, lexeme.size() - 1)),
                Decoration::kPrimed};
      case '?':
        return {std::string(lexeme.substr(0, lexeme.size() - 1)),
                Decoration::kInput};
      case '!':
        return {std::string(lexeme.substr(0, lexeme.size() - 1)),
                Decoration::kOutput};
      default:
        break;
    }
  }
  return {std::string(lexeme), Decoration::kNone};
}

std::string CanonicalDigits(std::string_view digits) {
  size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return "0";
  return std::string(digits.substr(first));
}

bool IsClassSectionStart(TokenKind kind) {
  switch (kind) {
    case TokenKind::kClass:
    case TokenKind::kVisibility:
    case TokenKind::kConst:
    case TokenKind::kAxiom:
    case TokenKind::kState:
    case TokenKind::kInit:
    case TokenKind::kOp:
    case TokenKind::kEnd:
      return true;
    default:
      return false;
  }
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, const std::string& file)
      : tokens_(tokens), file_(file) {
    eof_.kind = TokenKind::kNewline;
    eof_.span.file = file;
    if (!tokens.empty()) {
      eof_.span.start = eof_.span.end = tokens.back().span.end;
    }
  }

  ParseResult Run() {
    Specification spec;
    spec.file = file_;
    SkipNewlines();
    while (!AtEof()) {
      if (At(TokenKind::kClass)) {
        spec.classes.push_back(ParseClass());
      } else {
        Error("P001", "expected 'class', found " + Describe(Cur()), Cur().span);
        SkipLine();
      }
      SkipNewlines();
    }
    if (spec.classes.empty() && diagnostics_.empty()) {
      Error("P001", "expected at least one class", eof_.span);
    }
    ParseResult result;
    SortDiagnostics(diagnostics_);
    result.diagnostics = std::move(diagnostics_);
    if (!HasErrors(result.diagnostics)) result.spec = std::move(spec);
    return result;
  }

 private:
  // --- cursor ---------------------------------------------------------------

  bool AtEof() {
    SkipParenNewlines();
    return pos_ >= tokens_.size();
  }

  const Token& Cur() {
    SkipParenNewlines();
    return pos_ < tokens_.size() ? tokens_[pos_] : eof_;
  }

  bool At(TokenKind kind) { return !AtEof() && Cur().kind == kind; }

  const Token& Advance() {
    const Token& token = Cur();
    if (pos_ < tokens_.size()) {
      last_end_ = token.span.end;
      ++pos_;
    }
    return token;
  }

  bool Accept(TokenKind kind) {
    if (!At(kind)) return false;
    Advance();
    return true;
  }

  const Token& Expect(TokenKind kind, std::string_view what) {
    if (!At(kind)) {
      Fail("P001",
           "expected " + std::string(what) + ", found " + Describe(Cur()),
           Cur().span);
    }
    return Advance();
  }

  // Newlines are insignificant inside parentheses and braces.
  void SkipParenNewlines() {
    if (bracket_depth_ == 0) return;
    while (pos_ < tokens_.size() && tokens_[pos_].kind == TokenKind::kNewline) {
      ++pos_;
    }
  }

  void SkipNewlines() {
    while (pos_ < tokens_.size() && tokens_[pos_].kind == TokenKind::kNewline) {
      ++pos_;
    }
  }

  void ExpectLineEnd() {
    if (AtEof()) return;
    if (!At(TokenKind::kNewline)) {
      Fail("P001", "expected end of line, found " + Describe(Cur()),
           Cur().span);
    }
    Advance();
  }

  // Recovery: drop the rest of the current line.
  void SkipLine() {
    bracket_depth_ = 0;
    depth_ = 0;
    while (pos_ < tokens_.size()) {
      bool newline = tokens_[pos_].kind == TokenKind::kNewline;
      ++pos_;
      if (newline) break;
    }
  }

  bool AtClassSectionStart() { return !AtEof() && IsClassSectionStart(Cur().kind); }

  SourceSpan SpanFrom(const SourceSpan& start) const {
    return SourceSpan{file_, start.start,
                      last_end_ < start.start ? start.end : last_end_};
  }

  static std::string Describe(const Token& token) {
    if (token.kind == TokenKind::kNewline) {
      return token.lexeme.empty() ? "end of input" : "end of line";
    }
    if (token.kind == TokenKind::kError) {
      return "invalid character '" + token.lexeme + "'";
    }
    return "'" + token.lexeme + "'";
  }

  // --- diagnostics ----------------------------------------------------------

  void Error(std::string code, std::string message, SourceSpan span) {
    diagnostics_.push_back(Diagnostic{std::move(code), Severity::kError,
                                      std::move(message), std::move(span)});
  }

  [[noreturn]] void Fail(std::string code, std::string message,
                         SourceSpan span) {
    Error(std::move(code), std::move(message), std::move(span));
    throw SyntaxError{};
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& parser) : parser(parser) {
      if (++parser.depth_ > kMaxNesting) {
        parser.Fail("P005", "expression nesting exceeds " +
                                std::to_string(kMaxNesting) + " levels",
                    parser.Cur().span);
      }
    }
    ~DepthGuard() {
      if (parser.depth_ > 0) --parser.depth_;
    }
    Parser& parser;
  };

  // --- classes --------------------------------------------------------------

  ClassDecl ParseClass() {
    ClassDecl cls;
    const Token& kw = Advance();
    cls.span = kw.span;
    try {
      cls.name = ParsePlainIdent("class name");
      if (Accept(TokenKind::kLBracket)) {
        cls.generic_params.push_back(ParsePlainIdent("generic parameter"));
        while (Accept(TokenKind::kComma)) {
          cls.generic_params.push_back(ParsePlainIdent("generic parameter"));
        }
        Expect(TokenKind::kRBracket, "']'");
      }
      ExpectLineEnd();
    } catch (const SyntaxError&) {
      SkipLine();
    }

    bool closed = false;
    for (;;) {
      SkipNewlines();
      if (AtEof() || At(TokenKind::kClass)) break;
      if (At(TokenKind::kEnd)) {
        Advance();
        closed = true;
        cls.span = SpanFrom(cls.span);
        try {
          ExpectLineEnd();
        } catch (const SyntaxError&) {
          SkipLine();
        }
        break;
      }
      try {
        ParseSection(cls);
      } catch (const SyntaxError&) {
        SkipLine();
      }
    }
    if (!closed && !cls.name.empty()) {
      Error("P002", "class '" + cls.name + "' is missing 'end'", kw.span);
    }
    CheckDuplicateMembers(cls);
    return cls;
  }

  void ParseSection(ClassDecl& cls) {
    switch (Cur().kind) {
      case TokenKind::kVisibility: {
        const Token& kw = Advance();
        if (cls.visibility) {
          Error("P002", "class '" + cls.name + "' has more than one visibility list",
                kw.span);
        }
        std::vector<VisibilityEntry> entries;
        do {
          const Token& id = Expect(TokenKind::kIdent, "member name");
          CheckUndecorated(id, "visibility entry");
          entries.push_back({id.lexeme, id.span});
        } while (Accept(TokenKind::kComma));
        ExpectLineEnd();
        if (!cls.visibility) cls.visibility = std::move(entries);
        return;
      }
      case TokenKind::kConst: {
        Advance();
        cls.constants.push_back(ParseVarDecl());
        ExpectLineEnd();
        return;
      }
      case TokenKind::kAxiom: {
        Advance();
        cls.axioms.push_back(ParsePredicateLine(PredContext::kAxiom));
        return;
      }
      case TokenKind::kState: {
        const Token& kw = Advance();
        StateBlock block = ParseStateBlock(kw.span);
        if (cls.state) {
          Error("P002",
                "class '" + cls.name + "' has more than one state schema",
                kw.span);
        } else {
          cls.state = std::move(block);
        }
        return;
      }
      case TokenKind::kInit: {
        const Token& kw = Advance();
        InitBlock block;
        block.span = kw.span;
        ParsePredicateBlock(PredContext::kInit, block.preds);
        block.span = SpanFrom(block.span);
        if (cls.init) {
          Error("P002",
                "class '" + cls.name + "' has more than one INIT schema",
                kw.span);
        } else {
          cls.init = std::move(block);
        }
        return;
      }
      case TokenKind::kOp: {
        const Token& kw = Advance();
        const Token& name = Expect(TokenKind::kIdent, "operation name");
        CheckUndecorated(name, "operation name");
        if (Accept(TokenKind::kEq)) {
          OpExprDef def;
          def.name = name.lexeme;
          def.expr = ParseOpExpr();
          def.span = SpanFrom(kw.span);
          ExpectLineEnd();
          cls.op_expr_defs.push_back(std::move(def));
        } else {
          ExpectLineEnd();
          cls.operations.push_back(ParseOperation(kw.span, name.lexeme));
        }
        return;
      }
      default:
        Fail("P001", "expected a class section, found " + Describe(Cur()),
             Cur().span);
    }
  }

  StateBlock ParseStateBlock(const SourceSpan& start) {
    StateBlock block;
    block.span = start;
    enum { kPrimary, kSecondary, kWhere } mode = kPrimary;
    for (;;) {
      SkipNewlines();
      if (AtEof() || AtClassSectionStart()) break;
      try {
        if (At(TokenKind::kSecondary)) {
          const Token& kw = Advance();
          if (mode != kPrimary) {
            Fail("P001", "'secondary' must precede 'where' and appear once",
                 kw.span);
          }
          mode = kSecondary;
          continue;
        }
        if (At(TokenKind::kWhere)) {
          const Token& kw = Advance();
          if (mode == kWhere) Fail("P001", "duplicate 'where'", kw.span);
          mode = kWhere;
          continue;
        }
        if (mode == kWhere) {
          block.invariant_preds.push_back(ParsePredicateLine(PredContext::kState));
        } else {
          VarDecl decl = ParseVarDecl();
          ExpectLineEnd();
          (mode == kPrimary ? block.primary_vars : block.secondary_vars)
              .push_back(std::move(decl));
        }
      } catch (const SyntaxError&) {
        SkipLine();
      }
    }
    block.span = SpanFrom(block.span);
    return block;
  }

  void ParsePredicateBlock(PredContext context, std::vector<Predicate>& out) {
    for (;;) {
      SkipNewlines();
      if (AtEof() || AtClassSectionStart()) break;
      try {
        out.push_back(ParsePredicateLine(context));
      } catch (const SyntaxError&) {
        SkipLine();
      }
    }
  }

  OperationSchema ParseOperation(const SourceSpan& start, std::string name) {
    OperationSchema op;
    op.name = std::move(name);
    op.span = start;
    enum { kHeader, kDecls, kWhere } mode = kHeader;
    bool closed = false;
    for (;;) {
      SkipNewlines();
      if (AtEof()) break;
      if (At(TokenKind::kEnd)) {
        Advance();
        closed = true;
        op.span = SpanFrom(op.span);
        try {
          ExpectLineEnd();
        } catch (const SyntaxError&) {
          SkipLine();
        }
        break;
      }
      if (AtClassSectionStart()) break;
      try {
        if (At(TokenKind::kDelta)) {
          const Token& kw = Advance();
          if (mode != kHeader) {
            Fail("P001", "'delta' must be the first line of an operation",
                 kw.span);
          }
          mode = kDecls;
          do {
            const Token& id = Expect(TokenKind::kIdent, "state variable");
            CheckUndecorated(id, "delta entry");
            op.delta.push_back({id.lexeme, id.span});
          } while (Accept(TokenKind::kComma));
          ExpectLineEnd();
          continue;
        }
        if (At(TokenKind::kWhere)) {
          const Token& kw = Advance();
          if (mode == kWhere) Fail("P001", "duplicate 'where'", kw.span);
          mode = kWhere;
          continue;
        }
        if (mode == kWhere) {
          op.preds.push_back(ParsePredicateLine(PredContext::kOperation));
          continue;
        }
        mode = kDecls;
        ParseCommunication(op);
      } catch (const SyntaxError&) {
        SkipLine();
      }
    }
    if (!closed) {
      Error("P002", "operation '" + op.name + "' is missing 'end'", start);
    }
    return op;
  }

  void ParseCommunication(OperationSchema& op) {
    const Token& id = Expect(TokenKind::kIdent, "input or output declaration");
    auto [base, decoration] = SplitDecoration(id.lexeme);
    Expect(TokenKind::kColon, "':'");
    VarDecl decl{base, ParseType(), SourceSpan{}};
    decl.span = SpanFrom(id.span);
    ExpectLineEnd();
    if (decoration == Decoration::kInput) {
      op.inputs.push_back(std::move(decl));
    } else if (decoration == Decoration::kOutput) {
      op.outputs.push_back(std::move(decl));
    } else {
      Error("P004",
            "operation declaration '" + id.lexeme +
                "' must be decorated with '?' (input) or '!' (output)",
            id.span);
    }
  }

  // --- declarations ---------------------------------------------------------

  std::string ParsePlainIdent(std::string_view what) {
    const Token& id = Expect(TokenKind::kIdent, what);
    CheckUndecorated(id, what);
    return id.lexeme;
  }

  void CheckUndecorated(const Token& id, std::string_view what) {
    if (SplitDecoration(id.lexeme).second != Decoration::kNone) {
      Error("P004",
            "decorated name '" + id.lexeme + "' is not allowed as " +
                std::string(what),
            id.span);
    }
  }

  VarDecl ParseVarDecl() {
    const Token& id = Expect(TokenKind::kIdent, "declaration");
    CheckUndecorated(id, "a declared name outside an operation schema");
    Expect(TokenKind::kColon, "':'");
    VarDecl decl{id.lexeme, ParseType(), SourceSpan{}};
    decl.span = SpanFrom(id.span);
    return decl;
  }

  TypeExpr ParseType() {
    TypeExpr type;
    const Token& first = Cur();
    if (At(TokenKind::kTypeName)) {
      const Token& t = Advance();
      type.kind = t.lexeme == "NAT"   ? TypeExpr::Kind::kNat
                  : t.lexeme == "INT" ? TypeExpr::Kind::kInt
                                      : TypeExpr::Kind::kBool;
      type.span = t.span;
      return type;
    }
    if (At(TokenKind::kIdent)) {
      const Token& t = Advance();
      CheckUndecorated(t, "a type");
      type.kind = TypeExpr::Kind::kClassRef;
      type.class_name = t.lexeme;
      type.span = t.span;
      return type;
    }
    if (At(TokenKind::kLBrace)) {
      Advance();
      ++bracket_depth_;
      type.kind = TypeExpr::Kind::kSetLiteral;
      do {
        type.values.push_back(
            CanonicalDigits(Expect(TokenKind::kInteger, "integer literal").lexeme));
      } while (Accept(TokenKind::kComma));
      --bracket_depth_;
      Expect(TokenKind::kRBrace, "'}'");
      type.span = SpanFrom(first.span);
      return type;
    }
    Fail("P001", "expected a type, found " + Describe(Cur()), Cur().span);
  }

  // --- predicates -----------------------------------------------------------

  Predicate ParsePredicateLine(PredContext context) {
    Predicate pred = ParseImplies();
    ExpectLineEnd();
    CheckDecorations(*pred, context);
    return pred;
  }

  void CheckDecorations(const Expr& pred, PredContext context) {
    ForEachExpr(pred, [&](const Expr& e) {
      if (const auto* member = e.As<MemberAccess>()) {
        if (SplitDecoration(member->field).second != Decoration::kNone) {
          Error("P004",
                "member field '" + member->field + "' cannot be decorated",
                e.span);
        }
      }
      const auto* name = e.As<NameRef>();
      if (!name || name->decoration == Decoration::kNone ||
          context == PredContext::kOperation) {
        return;
      }
      Error("P004",
            "decorated name '" + name->id +
                std::string(DecorationSuffix(name->decoration)) +
                "' is only allowed inside an operation schema",
            e.span);
    });
  }

  ExprPtr ParseImplies() {
    ExprPtr lhs = ParseOr();
    if (At(TokenKind::kImplies)) {
      DepthGuard guard(*this);
      Advance();
      ExprPtr rhs = ParseImplies();
      SourceSpan span = SourceSpan::Merge(lhs->span, rhs->span);
      return MakeExpr(Logic{LogicOp::kImplies, {lhs, rhs}}, span);
    }
    return lhs;
  }

  ExprPtr ParseOr() {
    ExprPtr lhs = ParseAnd();
    while (Accept(TokenKind::kOr)) {
      ExprPtr rhs = ParseAnd();
      SourceSpan span = SourceSpan::Merge(lhs->span, rhs->span);
      lhs = MakeExpr(Logic{LogicOp::kOr, {lhs, rhs}}, span);
    }
    return lhs;
  }

  ExprPtr ParseAnd() {
    ExprPtr lhs = ParseNot();
    while (Accept(TokenKind::kAnd)) {
      ExprPtr rhs = ParseNot();
      SourceSpan span = SourceSpan::Merge(lhs->span, rhs->span);
      lhs = MakeExpr(Logic{LogicOp::kAnd, {lhs, rhs}}, span);
    }
    return lhs;
  }

  ExprPtr ParseNot() {
    if (At(TokenKind::kNot)) {
      DepthGuard guard(*this);
      SourceSpan start = Advance().span;
      ExprPtr operand = ParseNot();
      return MakeExpr(Logic{LogicOp::kNot, {operand}},
                      SourceSpan::Merge(start, operand->span));
    }
    return ParseRelation();
  }

  static std::optional<CompareOp> AsCompareOp(TokenKind kind) {
    switch (kind) {
      case TokenKind::kEq: return CompareOp::kEq;
      case TokenKind::kNeq: return CompareOp::kNeq;
      case TokenKind::kLt: return CompareOp::kLt;
      case TokenKind::kLe: return CompareOp::kLe;
      case TokenKind::kGt: return CompareOp::kGt;
      case TokenKind::kGe: return CompareOp::kGe;
      default: return std::nullopt;
    }
  }

  bool AtRelation() {
    return !AtEof() && (AsCompareOp(Cur().kind) || Cur().kind == TokenKind::kIn);
  }

  ExprPtr ParseRelation() {
    ExprPtr lhs = ParseAdditive();
    if (!AtRelation()) return lhs;
    const Token& op = Advance();
    ExprPtr rhs = ParseAdditive();
    SourceSpan span = SourceSpan::Merge(lhs->span, rhs->span);
    ExprPtr result =
        op.kind == TokenKind::kIn
            ? MakeExpr(Membership{lhs, rhs}, span)
            : MakeExpr(Compare{*AsCompareOp(op.kind), lhs, rhs}, span);
    if (AtRelation()) {
      Fail("P001", "relations do not chain; add parentheses", Cur().span);
    }
    return result;
  }

  ExprPtr ParseAdditive() {
    ExprPtr lhs = ParseMultiplicative();
    while (At(TokenKind::kPlus) || At(TokenKind::kMinus)) {
      ArithOp op = Advance().kind == TokenKind::kPlus ? ArithOp::kAdd
                                                      : ArithOp::kSub;
      ExprPtr rhs = ParseMultiplicative();
      SourceSpan span = SourceSpan::Merge(lhs->span, rhs->span);
      lhs = MakeExpr(Arith{op, lhs, rhs}, span);
    }
    return lhs;
  }

  ExprPtr ParseMultiplicative() {
    ExprPtr lhs = ParsePrimary();
    while (At(TokenKind::kStar) || At(TokenKind::kDiv) || At(TokenKind::kMod)) {
      TokenKind kind = Advance().kind;
      ArithOp op = kind == TokenKind::kStar  ? ArithOp::kMul
                   : kind == TokenKind::kDiv ? ArithOp::kDiv
                                             : ArithOp::kMod;
      ExprPtr rhs = ParsePrimary();
      SourceSpan span = SourceSpan::Merge(lhs->span, rhs->span);
      lhs = MakeExpr(Arith{op, lhs, rhs}, span);
    }
    return lhs;
  }

  ExprPtr ParsePrimary() {
    if (At(TokenKind::kInteger)) {
      const Token& t = Advance();
      return MakeExpr(IntLiteral{CanonicalDigits(t.lexeme)}, t.span);
    }
    if (At(TokenKind::kIdent)) {
      const Token& t = Advance();
      auto [base, decoration] = SplitDecoration(t.lexeme);
      ExprPtr expr = MakeExpr(NameRef{base, decoration}, t.span);
      while (At(TokenKind::kDot)) {
        Advance();
        const Token& field = Expect(TokenKind::kIdent, "member name");
        expr = MakeExpr(MemberAccess{expr, field.lexeme},
                        SourceSpan::Merge(expr->span, field.span));
      }
      return expr;
    }
    if (At(TokenKind::kLParen)) {
      DepthGuard guard(*this);
      Advance();
      ++bracket_depth_;
      ExprPtr inner = ParseImplies();
      --bracket_depth_;
      Expect(TokenKind::kRParen, "')'");
      return inner;
    }
    if (At(TokenKind::kLBrace)) {
      DepthGuard guard(*this);
      const Token& open = Advance();
      ++bracket_depth_;
      SetLiteral set;
      if (!At(TokenKind::kRBrace)) {
        do {
          set.elements.push_back(ParseAdditive());
        } while (Accept(TokenKind::kComma));
      }
      --bracket_depth_;
      Expect(TokenKind::kRBrace, "'}'");
      return MakeExpr(std::move(set), SpanFrom(open.span));
    }
    Fail("P001", "expected an expression, found " + Describe(Cur()),
         Cur().span);
  }

  // --- operation expressions ------------------------------------------------

  static std::optional<OpOperator> AsOpOperator(TokenKind kind) {
    switch (kind) {
      case TokenKind::kChoice: return OpOperator::kChoice;
      case TokenKind::kSemicolon: return OpOperator::kSequential;
      case TokenKind::kParallel: return OpOperator::kParallel;
      case TokenKind::kAmp: return OpOperator::kConjunction;
      default: return std::nullopt;
    }
  }

  OpExprPtr ParseOpExpr() {
    OpExprPtr lhs = ParseOpTerm();
    while (!AtEof() && AsOpOperator(Cur().kind)) {
      OpOperator op = *AsOpOperator(Advance().kind);
      OpExprPtr rhs = ParseOpTerm();
      SourceSpan span = SourceSpan::Merge(lhs->span, rhs->span);
      lhs = std::make_shared<const OpExpr>(OpExpr{OpBinary{op, lhs, rhs}, span});
    }
    return lhs;
  }

  OpExprPtr ParseOpTerm() {
    if (At(TokenKind::kLParen)) {
      DepthGuard guard(*this);
      Advance();
      ++bracket_depth_;
      OpExprPtr inner = ParseOpExpr();
      --bracket_depth_;
      Expect(TokenKind::kRParen, "')'");
      return inner;
    }
    const Token& first = Expect(TokenKind::kIdent, "operation name");
    CheckUndecorated(first, "an operation reference");
    if (Accept(TokenKind::kDot)) {
      const Token& second = Expect(TokenKind::kIdent, "operation name");
      CheckUndecorated(second, "an operation reference");
      return std::make_shared<const OpExpr>(
          OpExpr{OpMemberRef{first.lexeme, second.lexeme},
                 SourceSpan::Merge(first.span, second.span)});
    }
    return std::make_shared<const OpExpr>(OpExpr{OpRef{first.lexeme}, first.span});
  }

  // --- structural checks ----------------------------------------------------

  void CheckDuplicateMembers(const ClassDecl& cls) {
    std::vector<std::pair<std::string, SourceSpan>> members;
    for (const auto& c : cls.constants) members.emplace_back(c.name, c.span);
    if (cls.state) {
      for (const auto& v : cls.state->primary_vars) members.emplace_back(v.name, v.span);
      for (const auto& v : cls.state->secondary_vars) members.emplace_back(v.name, v.span);
    }
    for (const auto& op : cls.operations) members.emplace_back(op.name, op.span);
    for (const auto& def : cls.op_expr_defs) members.emplace_back(def.name, def.span);
    std::stable_sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
      return a.second.start < b.second.start;
    });
    std::map<std::string, SourceSpan> seen;
    for (const auto& [name, span] : members) {
      auto [it, inserted] = seen.emplace(name, span);
      if (!inserted) {
        Error("P003",
              "duplicate member '" + name + "' in class '" + cls.name + "'",
              span);
      }
    }
    for (const auto& op : cls.operations) {
      std::map<std::string, bool> io;
      for (const auto* list : {&op.inputs, &op.outputs}) {
        for (const auto& decl : *list) {
          if (!io.emplace(decl.name, true).second) {
            Error("P003",
                  "duplicate communication variable '" + decl.name +
                      "' in operation '" + op.name + "'",
                  decl.span);
          }
        }
      }
    }
  }

  const std::vector<Token>& tokens_;
  const std::string& file_;
  Token eof_;
  size_t pos_ = 0;
  int bracket_depth_ = 0;
  int depth_ = 0;
  SourcePos last_end_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

ParseResult Parse(const std::vector<Token>& tokens, const std::string& file) {
  return Parser(tokens, file).Run();
}

ParseResult ParseSource(std::string_view text, const std::string& file) {
  return Parse(Tokenize(text, file), file);
}

}  // namespace ozc::syntax
