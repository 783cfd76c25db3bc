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

#ifndef OZC_DIAGNOSTIC_H_
#define OZC_DIAGNOSTIC_H_

#include <string>
#include <string_view>
#include <vector>

#include "ozc/syntax/source_span.h"

namespace ozc {

enum class Severity { kError, kWarning };

/// A located compiler message. Codes are stable: P0xx come from the parser,
/// S0xx from semantic analysis.
///
///   P001 unexpected token            S001 unresolved name
///   P002 block structure error       S002 bad visibility entry
///   P003 duplicate member name       S003 duplicate definition
///   P004 misplaced decoration        S004 member not visible
///   P005 nesting too deep            S005 recursive member initialisation
///                                    S006 misplaced INIT reference
///                                    S007 wrong kind of member
///                                    S008 axiom mentions non-constant
///                                    S009 reserved identifier
///                                    S010 bad delta entry
///                                    S011 primed name outside delta
///                                    S012 output never constrained (warn)
///                                    S013 output has no defining equality
///                                         (warn)
///                                    S016 cyclic operation expression
///                                    S020 secondary var undefined
///                                    S021 secondary var defined twice
///                                    S022 secondary var reads secondary
///                                    S030 INIT predicate not executable
///                                    S031 variable initialised twice
///                                    S032 constructor parameter clash
///                                    S040 type mismatch
struct Diagnostic {
  std::string code;
  Severity severity = Severity::kError;
  std::string message;
  SourceSpan span;

  bool IsError() const { return severity == Severity::kError; }
};

std::string_view SeverityName(Severity severity);

bool HasErrors(const std::vector<Diagnostic>& diagnostics);

/// Orders by (file, start, end, code), then message. Stable.
void SortDiagnostics(std::vector<Diagnostic>& diagnostics);

/// `file:line:col: error: CODE: message`
std::string FormatHuman(const Diagnostic& diagnostic);

/// One JSON object without a trailing newline:
/// {code, severity, message, file, startLine, startCol, endLine, endCol}.
std::string FormatJsonLine(const Diagnostic& diagnostic);

}  // namespace ozc

#endif  // OZC_DIAGNOSTIC_H_
