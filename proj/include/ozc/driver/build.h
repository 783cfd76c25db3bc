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

#ifndef OZC_DRIVER_BUILD_H_
#define OZC_DRIVER_BUILD_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ozc/codegen/codegen.h"
#include "ozc/diagnostic.h"

namespace ozc::driver {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitUsage = 2;

struct BuildConfig {
  std::vector<std::string> input_paths;
  std::string output_dir;
  bool emit_runtime = false;
  bool json_diagnostics = false;
  bool no_frame_checks = false;
  bool check_only = false;
  /// Runtime module copied next to the output when `emit_runtime` is set.
  std::string runtime_path;
};

struct CompileResult {
  std::optional<std::string> python;  // set iff no errors
  std::vector<Diagnostic> diagnostics;
};

/// Parses, checks and (unless `check_only`) generates Python for one source
/// text. `file` labels diagnostics; `source_name` goes into the header.
CompileResult CompileSource(std::string_view text, const std::string& file,
                            const std::string& source_name,
                            const codegen::CodegenOptions& options,
                            bool check_only = false);

/// Runs `build` or `check` over every input independently. Diagnostics go to
/// `err` in human form, or to `out` as JSON lines. Returns kExitOk,
/// kExitDiagnostics when any input has errors, or kExitUsage on I/O failure.
int Run(const BuildConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ozc::driver

#endif  // OZC_DRIVER_BUILD_H_
