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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "r3/core/recipe.hpp"

namespace r3::allergen {

inline constexpr std::size_t kClassCount = 17;
inline constexpr std::string_view kInferredSource = "inferred:embedding";

struct AllergenClass {
  int allergen_id = 0;
  std::string category;              // case-folded
  std::vector<std::string> members;  // case-folded, sorted, unique
  std::string source_ref;
};

/// The allergen classes and their member ingredients. Exactly kClassCount
/// classes with unique categories and non-empty member sets.
class AllergenLexicon {
 public:
  static AllergenLexicon from_json(const nlohmann::json& doc);
  static AllergenLexicon load(const std::filesystem::path& path);
  // Skips the class-count check; for fixtures that exercise truncated
  // lexicons.
  static AllergenLexicon from_classes_unchecked(std::vector<AllergenClass> classes);

  const std::vector<AllergenClass>& classes() const { return classes_; }
  const AllergenClass* find_category(std::string_view category) const;

  /// Exact case-folded membership test over every class.
  std::vector<AllergenInfo> lookup(std::string_view ingredient) const;
  bool contains(std::string_view ingredient) const { return !lookup(ingredient).empty(); }

 private:
  std::vector<AllergenClass> classes_;  // sorted by allergen_id
};

AllergenInfo make_info(const AllergenClass& cls, std::string source_ref);

}  // namespace r3::allergen
