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

#ifndef OZC_TESTS_SUPPORT_FUZZ_H_
#define OZC_TESTS_SUPPORT_FUZZ_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ozc::testing {

/// `count` variants of `canonical` (comment-free, as printed by PrettyPrint),
/// each broken by construction: a stray `@`, a deleted `end` line, a
/// truncation inside the last class, an identifier replaced by `)`, or a
/// dangling `+` after a predicate.
std::vector<std::string> MalformedMutations(const std::string& canonical, int count,
                                            std::uint32_t seed);

/// Random byte-level edits of `text` with no validity guarantee.
std::string RandomEdit(const std::string& text, std::mt19937& rng);

/// Random expression text over names, decorated names, literals, member
/// access, arithmetic, relations and logic, parenthesised at random.
std::string RandomExprText(std::mt19937& rng, int depth);

}  // namespace ozc::testing

#endif  // OZC_TESTS_SUPPORT_FUZZ_H_
