// Copyright 2026 The R3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "r3/core/recipe.hpp"

namespace r3::ingest {

inline constexpr std::string_view kUnknownAction = "unknown";
inline constexpr std::string_view kUnresolvedObject = "unresolved";

struct Unresolved {
  std::string field_path;
  std::string reason;

  friend bool operator==(const Unresolved&, const Unresolved&) = default;
};

struct Fragment {
  std::string text;
  std::string delimiter;  // text + delimiter of every fragment rebuilds the paragraph
};

/// Splits at sentence ends (. ! ?), at ';', at "then"/"and then", and at
/// "and" when the following word is a lexicon verb ("crack the eggs and
/// whisk them", but not "salt and pepper").
std::vector<Fragment> split_fragments(std::string_view paragraph, const std::set<std::string>& verbs);

// First token that is a lexicon verb, directly or after stripping a simple
// inflection (-s, -es, -ed, -d, -ing). Empty when none.
std::string find_verb(std::string_view fragment, const std::set<std::string>& verbs);

struct SegmentResult {
  std::vector<Instruction> instructions;
  std::vector<Unresolved> unresolved;  // paths relative to the returned list
};

/// One Instruction per non-blank paragraph, one Task per fragment. Task
/// objects are the declared ingredient names found in the fragment by
/// substring (longest first, non-overlapping); a fragment naming none
/// inherits the previous task's objects ("whisk them"). Fragments without a
/// lexicon verb get action "unknown" and are flagged.
SegmentResult segment_instructions(std::span<const std::string> paragraphs, const std::set<std::string>& verbs,
                                   std::span<const std::string> ingredient_names = {});

}  // namespace r3::ingest
