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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "r3/core/recipe.hpp"

namespace r3 {

namespace allergen {
class AllergenLexicon;
}

enum class ViolationCode {
  kMissingId,
  kMissingName,
  kMissingIngredients,
  kMissingInstructions,
  kNegativeTime,
  kInvalidServings,
  kEmptyIngredientName,
  kIngredientNameNotNormalized,
  kDuplicateIngredient,
  kAlternativeIsSelf,
  kNegativeMeasure,
  kUnknownUnit,
  kUnknownAllergenCategory,
  kAllergenIdMismatch,
  kEmptyOriginalText,
  kMissingTasks,
  kEmptyAction,
  kActionNotLowercase,
  kMissingTaskObjects,
  kInvalidObjectRole,
  kUndeclaredIngredient,
  kEmptyFailureDescription,
  kMissingMedia,
};

std::string_view to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string path;  // field path; list elements keyed by name where one exists
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ValidationContext {
  // When set, allergen categories and ids are checked against it.
  const allergen::AllergenLexicon* lexicon = nullptr;
  // When set, every instruction modality path must name a readable file
  // under this root.
  std::optional<std::filesystem::path> media_root;
};

/// Every invariant violation of a recipe, sorted. Empty means valid.
///
/// Task objects must resolve to a declared ingredient, a tool named by any
/// task of the recipe, or an intermediate introduced by an output condition
/// of the same or an earlier instruction (bare predicate "batter" or an
/// argument of "name(arg, ...)").
std::vector<Violation> validate_recipe(const Recipe& recipe, const ValidationContext& context = {});

// Names bound by a condition predicate: the bare predicate string, or the
// arguments of the structured form `name(arg, ...)`.
std::vector<std::string> predicate_terms(std::string_view predicate);

}  // namespace r3
