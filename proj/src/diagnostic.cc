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

#include "ozc/diagnostic.h"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

namespace ozc {

std::string_view SeverityName(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

bool HasErrors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.IsError(); });
}

void SortDiagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::tie(a.span.file, a.span.start, a.span.end,
                                     a.code, a.message) <
                            std::tie(b.span.file, b.span.start, b.span.end,
                                     b.code, b.message);
                   });
}

std::string FormatHuman(const Diagnostic& diagnostic) {
  std::ostringstream os;
  os << diagnostic.span.file << ":" << diagnostic.span.start.line << ":"
     << diagnostic.span.start.col << ": " << SeverityName(diagnostic.severity)
     << ": " << diagnostic.code << ": " << diagnostic.message;
  return os.str();
}

std::string FormatJsonLine(const Diagnostic& diagnostic) {
  nlohmann::ordered_json j;
  j["code"] = diagnostic.code;
  j["severity"] = SeverityName(diagnostic.severity);
  j["message"] = diagnostic.message;
  j["file"] = diagnostic.span.file;
  j["startLine"] = diagnostic.span.start.line;
  j["startCol"] = diagnostic.span.start.col;
  j["endLine"] = diagnostic.span.end.line;
  j["endCol"] = diagnostic.span.end.col;
  // Fuzzed input may carry invalid UTF-8 into messages.
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace ozc
