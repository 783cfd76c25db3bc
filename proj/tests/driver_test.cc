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

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "support/test_files.h"

namespace ozc::driver {
namespace {

namespace fs = std::filesystem;

constexpr char kBad[] = "class C\n  state\n    x : INT\n  where\n    x = y\nend\n";

class DriverTest : public ::testing::Test {
 protected:
  fs::path Put(const std::string& name, const std::string& text) {
    fs::path path = dir_.path() / name;
    testing::WriteBytes(path, text);
    return path;
  }

  int Run(BuildConfig config) { return driver::Run(config, out_, err_); }

  testing::TempDir dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(DriverTest, BuildWritesOneModulePerInput) {
  BuildConfig config;
  config.input_paths = {testing::CorpusPath("creditcard.oz").string(),
                        testing::CorpusPath("twocards.oz").string()};
  config.output_dir = (dir_.path() / "out").string();
  EXPECT_EQ(Run(config), kExitOk);
  EXPECT_TRUE(fs::exists(dir_.path() / "out" / "creditcard.py"));
  EXPECT_TRUE(fs::exists(dir_.path() / "out" / "twocards.py"));
  EXPECT_FALSE(fs::exists(dir_.path() / "out" / "ozruntime.py"));
  EXPECT_EQ(err_.str(), "");
}

TEST_F(DriverTest, ErrorsGiveExitOneAndHumanDiagnostics) {
  BuildConfig config;
  config.input_paths = {Put("bad.oz", kBad).string()};
  config.output_dir = (dir_.path() / "out").string();
  EXPECT_EQ(Run(config), kExitDiagnostics);
  EXPECT_NE(err_.str().find("bad.oz:5:9: error: S001: unresolved name 'y'"), std::string::npos)
      << err_.str();
  EXPECT_FALSE(fs::exists(dir_.path() / "out" / "bad.py"));
}

TEST_F(DriverTest, FilesAreIsolated) {
  BuildConfig config;
  config.input_paths = {Put("bad.oz", kBad).string(), Put("good.oz", "class G\nend\n").string()};
  config.output_dir = (dir_.path() / "out").string();
  EXPECT_EQ(Run(config), kExitDiagnostics);
  EXPECT_TRUE(fs::exists(dir_.path() / "out" / "good.py"));
  EXPECT_FALSE(fs::exists(dir_.path() / "out" / "bad.py"));
}

TEST_F(DriverTest, JsonDiagnosticsGoToStandardOutput) {
  BuildConfig config;
  config.input_paths = {Put("bad.oz", kBad).string()};
  config.check_only = true;
  config.json_diagnostics = true;
  EXPECT_EQ(Run(config), kExitDiagnostics);
  EXPECT_EQ(err_.str(), "");
  std::string line = out_.str();
  ASSERT_FALSE(line.empty());
  EXPECT_EQ(line.back(), '\n');
  auto json = nlohmann::json::parse(line);
  EXPECT_EQ(json["code"], "S001");
  EXPECT_EQ(json["severity"], "error");
  EXPECT_EQ(json["startLine"], 5);
  EXPECT_EQ(json["startCol"], 9);
  EXPECT_EQ(json["endCol"], 10);
}

TEST_F(DriverTest, WarningsDoNotFailTheBuild) {
  BuildConfig config;
  config.input_paths = {Put("w.oz", "class C\n  op o\n    r! : INT\n  end\nend\n").string()};
  config.check_only = true;
  EXPECT_EQ(Run(config), kExitOk);
  EXPECT_NE(err_.str().find("warning: S012"), std::string::npos);
}

TEST_F(DriverTest, CheckWritesNothing) {
  fs::path input = Put("a.oz", "class A\nend\n");
  BuildConfig config;
  config.input_paths = {input.string()};
  config.check_only = true;
  EXPECT_EQ(Run(config), kExitOk);
  std::vector<fs::path> entries(fs::directory_iterator(dir_.path()), fs::directory_iterator());
  EXPECT_EQ(entries, std::vector<fs::path>{input});
}

TEST_F(DriverTest, MissingInputIsAnIoFailure) {
  BuildConfig config;
  config.input_paths = {(dir_.path() / "nope.oz").string()};
  config.check_only = true;
  EXPECT_EQ(Run(config), kExitUsage);
}

TEST_F(DriverTest, NoInputsIsAUsageError) {
  BuildConfig config;
  config.check_only = true;
  EXPECT_EQ(Run(config), kExitUsage);
}

TEST_F(DriverTest, CollidingOutputNamesAreRejected) {
  fs::create_directories(dir_.path() / "x");
  BuildConfig config;
  config.input_paths = {Put("a.oz", "class A\nend\n").string(),
                        Put("x/a.oz", "class B\nend\n").string()};
  config.output_dir = (dir_.path() / "out").string();
  EXPECT_EQ(Run(config), kExitUsage);
}

TEST_F(DriverTest, EmitRuntimeCopiesVerbatim) {
  const std::string runtime = "# runtime stand-in\r\nX = 1\n";
  BuildConfig config;
  config.input_paths = {Put("a.oz", "class A\nend\n").string()};
  config.output_dir = (dir_.path() / "out").string();
  config.emit_runtime = true;
  config.runtime_path = Put("ozruntime_src.py", runtime).string();
  EXPECT_EQ(Run(config), kExitOk);
  EXPECT_EQ(testing::ReadBytes(dir_.path() / "out" / "ozruntime.py"), runtime);
}

TEST_F(DriverTest, EmitRuntimeWithoutRuntimeFails) {
  BuildConfig config;
  config.input_paths = {Put("a.oz", "class A\nend\n").string()};
  config.output_dir = (dir_.path() / "out").string();
  config.emit_runtime = true;
  config.runtime_path = (dir_.path() / "missing.py").string();
  EXPECT_EQ(Run(config), kExitUsage);
}

TEST(CompileSourceTest, ParseErrorsStopBeforeSema) {
  CompileResult r = CompileSource("class\n", "f.oz", "f.oz", {});
  EXPECT_FALSE(r.python.has_value());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "P001");
}

TEST(CompileSourceTest, HeaderNamesSourceAndDigest) {
  CompileResult r = CompileSource("class A\nend\n", "dir/a.oz", "a.oz", {});
  ASSERT_TRUE(r.python.has_value());
  EXPECT_EQ(r.python->substr(0, r.python->find('\n')),
            "# Generated by ozc 0.1.0 from a.oz; do not edit.");
  EXPECT_NE(r.python->find("# source sha256: " + codegen::Sha256Hex("class A\nend\n")),
            std::string::npos);
}

// The installed binary: argument handling and exit codes.
int RunBinary(const std::string& args) {
  int status = std::system((std::string(OZC_BINARY) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(RunBinary("check " + testing::CorpusPath("twocards.oz").string()), 0);
  EXPECT_EQ(RunBinary(""), 2);
  EXPECT_EQ(RunBinary("build " + testing::CorpusPath("twocards.oz").string()), 2);
  EXPECT_EQ(RunBinary("check --bogus x.oz"), 2);
  EXPECT_EQ(RunBinary("--version"), 0);
}

TEST(CliTest, CheckWithErrorsExitsOne) {
  testing::TempDir dir;
  testing::WriteBytes(dir.path() / "bad.oz", kBad);
  EXPECT_EQ(RunBinary("check " + (dir.path() / "bad.oz").string()), 1);
}

}  // namespace
}  // namespace ozc::driver
