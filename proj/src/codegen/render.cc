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

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "ozc/codegen/codegen.h"

namespace ozc::codegen {
namespace {

constexpr std::string_view kIndent = "    ";

void RenderFunction(const GeneratedFunction& fn, const std::string& indent,
                    std::string& out) {
  for (const auto& d : fn.decorators) out += indent + "@" + d + "\n";
  out += indent + "def " + fn.name + "(";
  for (size_t i = 0; i < fn.params.size(); ++i) {
    if (i > 0) out += ", ";
    out += fn.params[i];
  }
  out += "):\n";
  std::string inner = indent + std::string(kIndent);
  if (fn.body.empty()) out += inner + "pass\n";
  for (const auto& line : fn.body) out += inner + line + "\n";
  for (const auto& line : fn.trailer) out += "\n" + indent + line + "\n";
}

void RenderClass(const GeneratedClass& cls, std::string& out) {
  for (const auto& helper : cls.helpers) {
    out += "\n\n";
    RenderFunction(helper, "", out);
  }
  out += "\n\n";
  for (const auto& w : cls.class_wrappers) out += "@" + w + "\n";
  out += "class " + cls.name + ":\n";
  std::string indent(kIndent);
  for (const auto& attr : cls.attributes) out += indent + attr + "\n";
  if (!cls.attributes.empty()) out += "\n";
  RenderFunction(cls.constructor, indent, out);
  for (const auto& method : cls.methods) {
    out += "\n";
    RenderFunction(method, indent, out);
  }
}

}  // namespace

std::string RenderModule(const GeneratedModule& module) {
  std::string out;
  for (const auto& line : module.header) out += line + "\n";
  out += "\n" + module.import_line + "\n";
  for (const auto& v : module.validators) {
    out += "\n\n";
    RenderFunction(v, "", out);
  }
  for (const auto& cls : module.classes) RenderClass(cls, out);
  return out;
}

std::string Sha256Hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr);
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace ozc::codegen
