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

#ifndef OZC_SYNTAX_SOURCE_SPAN_H_
#define OZC_SYNTAX_SOURCE_SPAN_H_

#include <compare>
#include <ostream>
#include <string>

namespace ozc {

/// 1-based line/column position. Columns count bytes, not code points.
struct SourcePos {
  int line = 1;
  int col = 1;

  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

/// A half-open region of a source file. `end` is the position just past the
/// last byte covered, so an empty span has start == end.
struct SourceSpan {
  std::string file;
  SourcePos start;
  SourcePos end;

  static SourceSpan Merge(const SourceSpan& a, const SourceSpan& b) {
    return SourceSpan{a.file, a.start < b.start ? a.start : b.start,
                      a.end < b.end ? b.end : a.end};
  }

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const SourceSpan& span) {
  return os << span.file << ":" << span.start.line << ":" << span.start.col
            << "-" << span.end.line << ":" << span.end.col;
}

}  // namespace ozc

#endif  // OZC_SYNTAX_SOURCE_SPAN_H_
