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

#include "support/fuzz.h"

#include <sstream>

#include "ozc/syntax/lexer.h"

namespace ozc::testing {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

size_t Pick(std::mt19937& rng, size_t n) {
  return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

// Byte offset of (line, col), both 1-based.
size_t Offset(const std::string& text, const SourcePos& pos) {
  size_t offset = 0;
  for (int line = 1; line < pos.line; ++line) offset = text.find('\n', offset) + 1;
  return offset + static_cast<size_t>(pos.col - 1);
}

std::string Mutate(const std::string& text, int strategy, std::mt19937& rng) {
  std::vector<std::string> lines = Lines(text);
  switch (strategy) {
    case 0: {
      std::string out = text;
      out.insert(Pick(rng, out.size() + 1), "@");
      return out;
    }
    case 1: {
      std::vector<size_t> ends;
      for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].find_first_not_of(' ') != std::string::npos &&
            lines[i].substr(lines[i].find_first_not_of(' ')) == "end") {
          ends.push_back(i);
        }
      }
      lines.erase(lines.begin() + static_cast<long>(ends[Pick(rng, ends.size())]));
      return JoinLines(lines);
    }
    case 2: {
      size_t last_class = text.rfind("class ");
      size_t last_end = text.rfind("end");
      size_t cut = last_class + 1 + Pick(rng, last_end - last_class - 1);
      return text.substr(0, cut);
    }
    case 3: {
      std::vector<syntax::Token> idents;
      for (const auto& t : syntax::Tokenize(text)) {
        if (t.kind == syntax::TokenKind::kIdent) idents.push_back(t);
      }
      const syntax::Token& victim = idents[Pick(rng, idents.size())];
      std::string out = text;
      out.replace(Offset(text, victim.span.start), victim.lexeme.size(), ")");
      return out;
    }
    default: {
      std::vector<size_t> preds;
      for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].find(" = ") != std::string::npos) preds.push_back(i);
      }
      lines[preds[Pick(rng, preds.size())]] += " +";
      return JoinLines(lines);
    }
  }
}

}  // namespace

std::vector<std::string> MalformedMutations(const std::string& canonical, int count,
                                            std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(Mutate(canonical, i % 5, rng));
  return out;
}

std::string RandomEdit(const std::string& text, std::mt19937& rng) {
  static const std::string kAlphabet =
      "abcxyz019 \n\t()[]{}:;,.'?!=<>+-*&|@#\"\\\x01\xff";
  std::string out = text;
  int edits = 1 + static_cast<int>(Pick(rng, 8));
  for (int i = 0; i < edits; ++i) {
    size_t at = Pick(rng, out.size() + 1);
    switch (Pick(rng, 3)) {
      case 0:
        out.insert(at, 1, kAlphabet[Pick(rng, kAlphabet.size())]);
        break;
      case 1:
        if (at < out.size()) out.erase(at, 1 + Pick(rng, 6));
        break;
      default:
        if (at < out.size()) out[at] = kAlphabet[Pick(rng, kAlphabet.size())];
        break;
    }
  }
  return out;
}

std::string RandomExprText(std::mt19937& rng, int depth) {
  static const std::vector<std::string> kAtoms = {
      "a", "b", "x?", "y!", "s'", "0", "42", "c.f", "{1, 2}", "{}"};
  static const std::vector<std::string> kArith = {" + ", " - ", " * ", " div ", " mod "};
  static const std::vector<std::string> kRel = {" = ", " != ", " < ", " <= ", " > ",
                                                " >= ", " in "};
  auto term = [&](auto&& self, int d) -> std::string {
    if (d <= 0 || Pick(rng, 3) == 0) return kAtoms[Pick(rng, kAtoms.size())];
    std::string e = self(self, d - 1) + kArith[Pick(rng, kArith.size())] + self(self, d - 1);
    return Pick(rng, 2) == 0 ? "(" + e + ")" : e;
  };
  auto pred = [&](auto&& self, int d) -> std::string {
    if (d <= 0 || Pick(rng, 3) == 0) {
      return "(" + term(term, 2) + ")" + kRel[Pick(rng, kRel.size())] + "(" +
             term(term, 2) + ")";
    }
    switch (Pick(rng, 4)) {
      case 0: return "not (" + self(self, d - 1) + ")";
      case 1: return "(" + self(self, d - 1) + ") and (" + self(self, d - 1) + ")";
      case 2: return "(" + self(self, d - 1) + ") or (" + self(self, d - 1) + ")";
      default: return "(" + self(self, d - 1) + ") implies (" + self(self, d - 1) + ")";
    }
  };
  return pred(pred, depth);
}

}  // namespace ozc::testing
