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

#ifndef OZC_TESTS_SUPPORT_TEST_FILES_H_
#define OZC_TESTS_SUPPORT_TEST_FILES_H_

#include <filesystem>
#include <string>

namespace ozc::testing {

/// Directory holding the corpus sources and golden outputs.
std::filesystem::path SourceDir();

std::filesystem::path CorpusPath(const std::string& name);
std::filesystem::path GoldenPath(const std::string& name);

/// Whole file as bytes; throws std::runtime_error when unreadable.
std::string ReadBytes(const std::filesystem::path& path);

void WriteBytes(const std::filesystem::path& path, const std::string& data);

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace ozc::testing

#endif  // OZC_TESTS_SUPPORT_TEST_FILES_H_
