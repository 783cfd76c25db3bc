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

#include "ozc/driver/build.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "ozc/sema/checker.h"
#include "ozc/syntax/parser.h"

namespace ozc::driver {
namespace {

namespace fs = std::filesystem;

std::optional<std::string> ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return text.str();
}

// Writes through a sibling temporary so readers never see a partial file.
bool WriteFile(const fs::path& path, std::string_view data) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out.flush()) return false;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
  return !ec;
}

}  // namespace

CompileResult CompileSource(std::string_view text, const std::string& file,
                            const std::string& source_name,
                            const codegen::CodegenOptions& options, bool check_only) {
  CompileResult result;
  syntax::ParseResult parsed = syntax::ParseSource(text, file);
  result.diagnostics = std::move(parsed.diagnostics);
  if (!parsed.spec) return result;
  sema::AnalysisResult analysis = sema::Analyze(*parsed.spec);
  result.diagnostics.insert(result.diagnostics.end(), analysis.diagnostics.begin(),
                            analysis.diagnostics.end());
  SortDiagnostics(result.diagnostics);
  if (!analysis.model || check_only) return result;
  result.python = codegen::RenderModule(
      codegen::EmitModule(*analysis.model, source_name, text, options));
  return result;
}

int Run(const BuildConfig& config, std::ostream& out, std::ostream& err) {
  if (config.input_paths.empty()) {
    err << "ozc: no input files\n";
    return kExitUsage;
  }
  if (!config.check_only && config.output_dir.empty()) {
    err << "ozc: build needs an output directory (-o)\n";
    return kExitUsage;
  }

  std::map<std::string, std::string> stems;
  for (const auto& input : config.input_paths) {
    std::string name = fs::path(input).stem().string() + ".py";
    auto [it, inserted] = stems.emplace(name, input);
    if (!inserted && !config.check_only) {
      err << "ozc: " << input << " and " << it->second << " would both write " << name
          << "\n";
      return kExitUsage;
    }
  }

  fs::path out_dir(config.output_dir);
  if (!config.check_only) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
      err << "ozc: cannot create " << config.output_dir << ": " << ec.message() << "\n";
      return kExitUsage;
    }
  }

  codegen::CodegenOptions options;
  options.frame_checks = !config.no_frame_checks;
  bool io_failed = false;
  bool had_errors = false;
  for (const auto& input : config.input_paths) {
    std::optional<std::string> text = ReadFile(input);
    if (!text) {
      err << "ozc: cannot read " << input << "\n";
      io_failed = true;
      continue;
    }
    fs::path path(input);
    CompileResult result = CompileSource(*text, input, path.filename().string(),
                                         options, config.check_only);
    for (const auto& d : result.diagnostics) {
      if (config.json_diagnostics) {
        out << FormatJsonLine(d) << "\n";
      } else {
        err << FormatHuman(d) << "\n";
      }
    }
    if (HasErrors(result.diagnostics)) {
      had_errors = true;
      continue;
    }
    if (config.check_only) continue;
    fs::path target = out_dir / (path.stem().string() + ".py");
    if (!WriteFile(target, *result.python)) {
      err << "ozc: cannot write " << target.string() << "\n";
      io_failed = true;
    }
  }

  if (config.emit_runtime && !config.check_only) {
    std::optional<std::string> runtime =
        config.runtime_path.empty() ? std::nullopt : ReadFile(config.runtime_path);
    if (!runtime) {
      err << "ozc: runtime module not found at '" << config.runtime_path
          << "' (set --runtime-path or OZC_RUNTIME_PATH)\n";
      io_failed = true;
    } else if (!WriteFile(out_dir / "ozruntime.py", *runtime)) {
      err << "ozc: cannot write " << (out_dir / "ozruntime.py").string() << "\n";
      io_failed = true;
    }
  }

  if (io_failed) return kExitUsage;
  return had_errors ? kExitDiagnostics : kExitOk;
}

}  // namespace ozc::driver
