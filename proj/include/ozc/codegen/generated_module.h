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

#ifndef OZC_CODEGEN_GENERATED_MODULE_H_
#define OZC_CODEGEN_GENERATED_MODULE_H_

#include <string>
#include <vector>

namespace ozc::codegen {

/// A Python `def` with its decorators. Body lines are relative to the body
/// indentation; trailer lines follow the definition at its own level.
struct GeneratedFunction {
  std::vector<std::string> decorators;  // without the leading '@'
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> body;
  std::vector<std::string> trailer;
};

/// An operation expression bound to a combinator call over member methods.
struct OpExprBinding {
  std::string name;
  std::string call;  // e.g. `choice(self.c1.withdraw, self.c2.withdraw)`
};

struct GeneratedClass {
  std::string name;
  /// Module-level helpers placed before the class, such as the secondary
  /// variable updater.
  std::vector<GeneratedFunction> helpers;
  /// Class decorators, outermost first.
  std::vector<std::string> class_wrappers;
  std::vector<std::string> attributes;
  GeneratedFunction constructor;
  /// Methods after the constructor, in source order.
  std::vector<GeneratedFunction> methods;
  std::vector<OpExprBinding> op_expr_bindings;
};

struct GeneratedModule {
  std::vector<std::string> header;  // comment lines
  std::string import_line;
  std::vector<GeneratedFunction> validators;
  std::vector<GeneratedClass> classes;
};

}  // namespace ozc::codegen

#endif  // OZC_CODEGEN_GENERATED_MODULE_H_
