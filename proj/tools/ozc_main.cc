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

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ozc/codegen/codegen.h"
#include "ozc/driver/build.h"

namespace {

std::string DefaultRuntimePath() {
  if (const char* env = std::getenv("OZC_RUNTIME_PATH"); env && *env) return env;
  return OZC_DEFAULT_RUNTIME_PATH;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ozc: compiles Object-Z class specifications to contract-checked Python"};
  app.set_version_flag("--version", std::string(ozc::codegen::kOzcVersion));
  app.require_subcommand(1);

  ozc::driver::BuildConfig config;
  config.runtime_path = DefaultRuntimePath();

  CLI::App* build = app.add_subcommand("build", "Generate one Python module per input");
  build->add_option("inputs", config.input_paths, "Specification files")->required();
  build->add_option("-o,--out", config.output_dir, "Output directory")->required();
  build->add_flag("--emit-runtime", config.emit_runtime,
                  "Copy the ozruntime module into the output directory");
  build->add_option("--runtime-path", config.runtime_path,
                    "Runtime module to copy with --emit-runtime");
  build->add_flag("--json-diagnostics", config.json_diagnostics,
                  "Print diagnostics as JSON lines on standard output");
  build->add_flag("--no-frame-checks", config.no_frame_checks,
                  "Omit postconditions for state outside the delta list");

  CLI::App* check = app.add_subcommand("check", "Parse and check without writing files");
  check->add_option("inputs", config.input_paths, "Specification files")->required();
  check->add_flag("--json-diagnostics", config.json_diagnostics,
                  "Print diagnostics as JSON lines on standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ozc::driver::kExitUsage;
  }
  config.check_only = check->parsed();
  return ozc::driver::Run(config, std::cout, std::cerr);
}
