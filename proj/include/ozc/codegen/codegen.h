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

#ifndef OZC_CODEGEN_CODEGEN_H_
#define OZC_CODEGEN_CODEGEN_H_

#include <string>
#include <string_view>

#include "ozc/codegen/generated_module.h"
#include "ozc/sema/checker.h"

namespace ozc::codegen {

inline constexpr std::string_view kOzcVersion = "0.1.0";

struct CodegenOptions {
  /// Emit one `frame=True` postcondition per state variable outside the
  /// delta list.
  bool frame_checks = true;
};

/// Builds the emission model for one accepted specification. `source_name`
/// is written into the header; `source_text` is digested into it.
GeneratedModule EmitModule(const sema::SemanticModel& model,
                           std::string_view source_name,
                           std::string_view source_text,
                           const CodegenOptions& options = {});

/// Renders the module as Python 3 source: 4-space indentation, `\n` line
/// endings, one trailing newline.
std::string RenderModule(const GeneratedModule& module);

/// Lowercase hex SHA-256 of `data`.
std::string Sha256Hex(std::string_view data);

}  // namespace ozc::codegen

#endif  // OZC_CODEGEN_CODEGEN_H_
