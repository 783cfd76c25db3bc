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

#include "ozc/sema/checker.h"

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ozc/syntax/parser.h"
#include "ozc/syntax/pretty_printer.h"
#include "support/test_files.h"

namespace ozc::sema {
namespace {

// Parses (which must succeed) and analyses; returns "CODE line:col" per
// diagnostic.
std::vector<std::string> Check(const std::string& source) {
  syntax::ParseResult parsed = syntax::ParseSource(source, "t.oz");
  EXPECT_TRUE(parsed.ok()) << source;
  if (!parsed.ok()) return {"parse failed"};
  std::vector<std::string> out;
  for (const auto& d : CheckSpecification(*parsed.spec)) {
    out.push_back(d.code + " " + std::to_string(d.span.start.line) + ":" +
                  std::to_string(d.span.start.col));
  }
  return out;
}

using Codes = std::vector<std::string>;

struct Analysed {
  syntax::Specification spec;
  AnalysisResult result;
};

Analysed AnalyseCorpus(const std::string& name) {
  syntax::ParseResult parsed =
      syntax::ParseSource(testing::ReadBytes(testing::CorpusPath(name)), name);
  Analysed out{std::move(*parsed.spec), {}};
  out.result = Analyze(out.spec);
  return out;
}

TEST(CheckerTest, CorpusIsAccepted) {
  for (const std::string name : {"creditcard.oz", "twocards.oz"}) {
    Analysed a = AnalyseCorpus(name);
    EXPECT_TRUE(a.result.diagnostics.empty()) << name;
    EXPECT_TRUE(a.result.model.has_value()) << name;
  }
}

TEST(CheckerTest, UnresolvedName) {
  EXPECT_EQ(Check("class C\n  const k : NAT\n  axiom k = j\nend\n"), Codes{"S001 3:13"});
}

TEST(CheckerTest, UnknownClassType) {
  EXPECT_EQ(Check("class C\n  state\n    x : Foo\nend\n"), Codes{"S001 3:9"});
}

TEST(CheckerTest, UnknownInput) {
  EXPECT_EQ(Check("class C\n  op o\n  where\n    x? > 0\n  end\nend\n"), Codes{"S001 4:5"});
}

TEST(CheckerTest, VisibilityEntryMustNameMember) {
  EXPECT_EQ(Check("class C\n  visibility go, INIT\nend\n"), Codes{"S002 2:14"});
}

TEST(CheckerTest, DuplicateClass) {
  EXPECT_EQ(Check("class C\nend\nclass C\nend\n"), Codes{"S003 3:1"});
}

TEST(CheckerTest, PrivateMemberAccessIsRejected) {
  EXPECT_EQ(Check("class A\n  visibility go\n  state\n    v : INT\n  op go\n  end\nend\n"
                  "class B\n  state\n    a : A\n    w : INT\n  where\n    w = a.v\nend\n"),
            Codes{"S004 13:9"});
}

TEST(CheckerTest, PrivateOperationInExpressionIsRejected) {
  EXPECT_EQ(Check("class A\n  visibility go\n  op go\n  end\n  op hide\n  end\nend\n"
                  "class B\n  state\n    a : A\n  op x = a.hide\nend\n"),
            Codes{"S004 11:10"});
}

TEST(CheckerTest, MemberInitCycle) {
  EXPECT_EQ(Check("class A\n  state\n    b : B\n  init\n    b.INIT\nend\n"
                  "class B\n  state\n    a : A\n  init\n    a.INIT\nend\n"),
            Codes{"S005 11:5"});
  EXPECT_EQ(Check("class A\n  state\n    a : A\n  init\n    a.INIT\nend\n"),
            Codes{"S005 5:5"});
}

TEST(CheckerTest, InitOnNonObject) {
  EXPECT_EQ(Check("class C\n  state\n    x : INT\n  init\n    x.INIT\nend\n"),
            Codes{"S006 5:5"});
}

TEST(CheckerTest, OperationUsedAsValue) {
  EXPECT_EQ(Check("class C\n  state\n    x : INT\n  where\n    x = go\n  op go\n  end\nend\n"),
            Codes{"S007 5:9"});
}

TEST(CheckerTest, AxiomMentionsStateVariable) {
  EXPECT_EQ(Check("class C\n  const k : NAT\n  axiom k > x\n  state\n    x : INT\nend\n"),
            Codes{"S008 3:13"});
}

TEST(CheckerTest, ReservedIdentifiers) {
  EXPECT_EQ(Check("class C\n  state\n    self : INT\nend\n"), Codes{"S009 3:5"});
  EXPECT_EQ(Check("class C\n  op o\n    result? : INT\n  end\nend\n"), Codes{"S009 3:5"});
  EXPECT_EQ(Check("class lambda\nend\n"), Codes{"S009 1:1"});
}

TEST(CheckerTest, UnconstrainedOutputIsAWarning) {
  syntax::ParseResult parsed =
      syntax::ParseSource("class C\n  op o\n    r! : INT\n  end\nend\n", "t.oz");
  AnalysisResult result = Analyze(*parsed.spec);
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].code, "S012");
  EXPECT_EQ(result.diagnostics[0].severity, Severity::kWarning);
  EXPECT_TRUE(result.model.has_value());
}

TEST(CheckerTest, OutputWithoutDefiningEqualityIsAWarning) {
  EXPECT_EQ(Check("class C\n  op o\n    r! : INT\n  where\n    r! > 0\n  end\nend\n"),
            Codes{"S013 3:5"});
}

TEST(CheckerTest, CyclicOperationExpressions) {
  EXPECT_EQ(Check("class C\n  op a = b\n  op b = a\nend\n"), Codes{"S016 2:3"});
  EXPECT_EQ(Check("class C\n  op a = a [] a\nend\n"), Codes{"S016 2:3"});
}

TEST(CheckerTest, SecondaryVariableRules) {
  EXPECT_EQ(Check("class C\n  state\n    x : INT\n  secondary\n    y : INT\nend\n"),
            Codes{"S020 5:5"});
  EXPECT_EQ(Check("class C\n  state\n    x : INT\n  secondary\n    y : INT\n  where\n"
                  "    y = x\n    y = x + 0\nend\n"),
            Codes{"S021 8:5"});
  EXPECT_EQ(Check("class C\n  state\n    x : INT\n  secondary\n    y : INT\n    z : INT\n"
                  "  where\n    y = x\n    z = y + 1\nend\n"),
            Codes{"S022 9:5"});
}

TEST(CheckerTest, InitPredicateShape) {
  EXPECT_EQ(Check("class C\n  state\n    x : INT\n  init\n    x > 0\nend\n"),
            Codes{"S030 5:5"});
  EXPECT_EQ(Check("class C\n  state\n    x : INT\n  secondary\n    y : INT\n  where\n"
                  "    y = x\n  init\n    y = 0\nend\n"),
            Codes{"S030 9:5"});
}

TEST(CheckerTest, VariableInitialisedTwice) {
  EXPECT_EQ(Check("class C\n  state\n    x : INT\n  init\n    x = 0\n    x = 1\nend\n"),
            Codes{"S031 6:5"});
}

TEST(CheckerTest, ConstructorParameterClash) {
  EXPECT_EQ(Check("class A\n  const k : NAT\nend\n"
                  "class B\n  const a_k : NAT\n  state\n    a : A\n  init\n    a.INIT\nend\n"),
            Codes{"S032 4:1"});
}

TEST(CheckerTest, TypeMismatch) {
  EXPECT_EQ(Check("class C\n  const k : NAT\n  axiom k = {1}\nend\n"), Codes{"S040 3:9"});
  EXPECT_EQ(Check("class C\n  const k : NAT\n  axiom k + 1\nend\n"), Codes{"S040 3:9"});
}

TEST(CheckerTest, DiagnosticsAreSortedAndModelWithheldOnError) {
  syntax::ParseResult parsed = syntax::ParseSource(
      "class C\n  state\n    x : INT\n  where\n    x = zz\n  init\n    qq = 1\nend\n", "t.oz");
  AnalysisResult result = Analyze(*parsed.spec);
  EXPECT_FALSE(result.model.has_value());
  ASSERT_EQ(result.diagnostics.size(), 2u);
  EXPECT_LT(result.diagnostics[0].span.start, result.diagnostics[1].span.start);
}

TEST(ConstructorPlanTest, CreditCard) {
  Analysed a = AnalyseCorpus("creditcard.oz");
  const ConstructorPlan& plan = a.result.model->FindClass("CreditCard")->constructor;
  ASSERT_EQ(plan.params.size(), 1u);
  EXPECT_EQ(plan.params[0].name, "limit");
  EXPECT_EQ(plan.params[0].source, CtorParam::Source::kConstant);
  ASSERT_EQ(plan.actions.size(), 1u);
  EXPECT_EQ(plan.actions[0].target, "balance");
  EXPECT_EQ(syntax::PrettyPrintExpr(*plan.actions[0].rhs), "0");
}

TEST(ConstructorPlanTest, TwoCardsForwardsMemberParameters) {
  Analysed a = AnalyseCorpus("twocards.oz");
  const ConstructorPlan& plan = a.result.model->FindClass("TwoCards")->constructor;
  ASSERT_EQ(plan.params.size(), 2u);
  EXPECT_EQ(plan.params[0].name, "c1_limit");
  EXPECT_EQ(plan.params[0].member, "c1");
  EXPECT_EQ(plan.params[0].inner, "limit");
  EXPECT_EQ(plan.params[1].name, "c2_limit");
  ASSERT_EQ(plan.actions.size(), 2u);
  EXPECT_EQ(plan.actions[0].kind, InitAction::Kind::kConstructMember);
  EXPECT_EQ(plan.actions[0].class_name, "CreditCard");
}

TEST(ConstructorPlanTest, UninitialisedStateBecomesParameter) {
  syntax::ParseResult parsed = syntax::ParseSource(
      "class C\n  const k : NAT\n  state\n    x : INT\n    y : BOOL\n  init\n    x = k\nend\n");
  AnalysisResult result = Analyze(*parsed.spec);
  ASSERT_TRUE(result.model.has_value());
  std::vector<std::string> names;
  for (const auto& p : result.model->classes[0].constructor.params) names.push_back(p.name);
  EXPECT_EQ(names, (std::vector<std::string>{"k", "y"}));
}

TEST(SignatureTest, CompositionRules) {
  Analysed a = AnalyseCorpus("twocards.oz");
  const auto& sigs = a.result.model->FindClass("TwoCards")->signatures;
  EXPECT_EQ(sigs.at("withdrawEither").inputs, std::vector<std::string>{"amount"});
  EXPECT_EQ(sigs.at("transfer").inputs, std::vector<std::string>{"amount"});
  EXPECT_TRUE(sigs.at("transferAvail").inputs.empty());
  EXPECT_EQ(sigs.at("transferAvail").outputs, std::vector<std::string>{"amount"});
  EXPECT_TRUE(sigs.at("transferConfirm").inputs.empty());
  EXPECT_EQ(sigs.at("transferConfirm").outputs,
            (std::vector<std::string>{"amount", "bal"}));
}

TEST(SecondaryPlanTest, TwoCardsTotal) {
  Analysed a = AnalyseCorpus("twocards.oz");
  const SecondaryUpdatePlan& plan = a.result.model->FindClass("TwoCards")->secondary;
  ASSERT_EQ(plan.definitions.size(), 1u);
  EXPECT_EQ(plan.definitions[0].var, "totalbalance");
  EXPECT_EQ(plan.definitions[0].reads,
            (std::vector<std::string>{"c1.balance", "c2.balance"}));
  EXPECT_TRUE(a.result.model->FindClass("CreditCard")->secondary.empty());
}

}  // namespace
}  // namespace ozc::sema
