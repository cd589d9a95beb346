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
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "r3/allergen/infer.hpp"
#include "r3/core/corpus.hpp"
#include "r3/core/recipe.hpp"
#include "r3/ingest/segment.hpp"

namespace r3::ingest {

inline constexpr std::string_view kUntitled = "untitled recipe";
inline constexpr std::string_view kUnresolvedIngredient = "unresolved ingredient";
inline constexpr std::string_view kEmptyStep = "(empty step)";

/// Plain-text recipe as found in a source dataset.
struct RawRecipe {
  std::string title;
  std::vector<std::string> ingredient_lines;
  std::vector<std::string> instruction_paragraphs;
  std::vector<std::vector<std::string>> image_paths;  // per paragraph, may be shorter

  // {"title", "ingredients": [..], "steps": [..], "step_images": [str|[str]|null]}
  static RawRecipe from_json(const nlohmann::json& doc);
  static RawRecipe load(const std::filesystem::path& path);
};

/// A draft recipe plus every field that needs manual curation. Each
/// unresolved field holds a placeholder in the draft (0 minutes, action
/// "unknown", object "unresolved", ...).
struct IngestReport {
  Recipe draft;
  std::vector<Unresolved> unresolved;
};

/// Converts a raw recipe into a draft: quantities parsed, paragraphs
/// segmented into tasks, allergens tagged by lookup and embedding
/// inference, and validation violations folded into `unresolved`.
/// Throws Error{kInvalidArgument} when the raw recipe has no steps at all.
IngestReport ingest(const RawRecipe& raw, const Lexicons& lexicons,
                    double infer_threshold = allergen::kDefaultInferThreshold);

/// Slug of `name`, suffixed "-2", "-3", ... while it collides with `taken`.
std::string unique_recipe_id(std::string_view name, const std::set<std::string>& taken);

nlohmann::json report_to_json(const IngestReport& report);

}  // namespace r3::ingest
