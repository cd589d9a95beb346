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

#include "r3/ingest/ingest.hpp"

#include <algorithm>

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"
#include "r3/core/json_io.hpp"
#include "r3/core/validate.hpp"
#include "r3/ingest/quantity.hpp"

namespace r3::ingest {

namespace {

std::vector<std::string> string_array(const nlohmann::json& doc, const char* key, bool required) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    if (required) throw Error(ErrorCode::kParse, std::string("raw recipe: missing field '") + key + "'", key);
    return {};
  }
  if (!it->is_array()) throw Error(ErrorCode::kParse, std::string("raw recipe: '") + key + "' must be a list", key);
  std::vector<std::string> out;
  for (const auto& v : *it) {
    if (!v.is_string()) throw Error(ErrorCode::kParse, std::string("raw recipe: '") + key + "' must hold strings", key);
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

RawRecipe RawRecipe::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "raw recipe must be a JSON object");
  RawRecipe raw;
  const auto title = doc.find("title");
  if (title == doc.end() || !title->is_string()) throw Error(ErrorCode::kParse, "raw recipe: 'title' must be a string", "title");
  raw.title = title->get<std::string>();
  raw.ingredient_lines = string_array(doc, "ingredients", true);
  raw.instruction_paragraphs = string_array(doc, "steps", true);
  if (const auto it = doc.find("step_images"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw Error(ErrorCode::kParse, "raw recipe: 'step_images' must be a list", "step_images");
    for (const auto& entry : *it) {
      std::vector<std::string> paths;
      if (entry.is_string()) {
        paths.push_back(entry.get<std::string>());
      } else if (entry.is_array()) {
        for (const auto& p : entry) {
          if (p.is_string()) paths.push_back(p.get<std::string>());
        }
      }
      raw.image_paths.push_back(std::move(paths));
    }
  }
  return raw;
}

RawRecipe RawRecipe::load(const std::filesystem::path& path) {
  try {
    return from_json(nlohmann::json::parse(text::read_file(path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("raw recipe: malformed JSON: ") + e.what(), path.string());
  }
}

std::string unique_recipe_id(std::string_view name, const std::set<std::string>& taken) {
  std::string base = text::slugify(name);
  if (base.empty()) base = text::slugify(kUntitled);
  if (!taken.contains(base)) return base;
  for (int suffix = 2;; ++suffix) {
    std::string candidate = base + "-" + std::to_string(suffix);
    if (!taken.contains(candidate)) return candidate;
  }
}

IngestReport ingest(const RawRecipe& raw, const Lexicons& lexicons, double infer_threshold) {
  if (raw.instruction_paragraphs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "raw recipe has no instructions", raw.title);
  }
  IngestReport report;
  Recipe& r = report.draft;
  auto flag = [&report](std::string path, std::string reason) {
    report.unresolved.push_back(Unresolved{std::move(path), std::move(reason)});
  };

  r.name = text::normalize_space(raw.title);
  if (r.name.empty()) {
    r.name = kUntitled;
    flag("name", "title is empty");
  }
  r.id = unique_recipe_id(r.name, {});
  r.prep_time = 0;
  r.cook_time = 0;
  r.servings = 1;
  flag("prep_time", "preparation time not stated in source");
  flag("cook_time", "cooking time not stated in source");
  flag("servings", "servings not stated in source");

  for (const auto& line : raw.ingredient_lines) {
    if (text::normalize_space(line).empty()) continue;
    const auto parsed = parse_quantity(line);
    const std::string path = "ingredients[" + parsed.name + "]";
    if (r.find_ingredient(parsed.name) != nullptr) {
      flag(path, "ingredient listed twice; merged");
      continue;
    }
    Ingredient ing;
    ing.name = parsed.name;
    ing.quantity = parsed.quantity;
    ing.quality_characteristic = parsed.quality;
    if (!parsed.resolved) flag(path + ".quantity", "no leading measure in '" + text::normalize_space(line) + "'");
    if (ing.name == kUnresolvedObject || ing.name == kUnresolvedIngredient) {
      flag(path, "ingredient name collides with a placeholder");
    }
    if (lexicons.allergens) {
      ing.allergens = allergen::tag_ingredient(ing.name, *lexicons.allergens,
                                               lexicons.embeddings ? &*lexicons.embeddings : nullptr, infer_threshold);
    }
    r.ingredients.push_back(std::move(ing));
  }
  if (r.ingredients.empty()) {
    Ingredient placeholder;
    placeholder.name = kUnresolvedIngredient;
    r.ingredients.push_back(std::move(placeholder));
    flag("ingredients", "no ingredient lines in source");
  }

  std::vector<std::string> names;
  for (const auto& ing : r.ingredients) {
    if (ing.name != kUnresolvedObject && ing.name != kUnresolvedIngredient) names.push_back(ing.name);
  }

  for (std::size_t p = 0; p < raw.instruction_paragraphs.size(); ++p) {
    const auto& paragraph = raw.instruction_paragraphs[p];
    auto seg = segment_instructions(std::span(&paragraph, 1), lexicons.verbs, names);
    const std::string prefix = "instructions[" + std::to_string(r.instructions.size()) + "]";
    for (auto& u : seg.unresolved) {
      u.field_path.replace(0, std::string_view("instructions[0]").size(), prefix);
      report.unresolved.push_back(std::move(u));
    }
    if (seg.instructions.empty()) continue;
    Instruction ins = std::move(seg.instructions.front());
    if (p < raw.image_paths.size()) ins.modality = raw.image_paths[p];
    r.instructions.push_back(std::move(ins));
  }
  if (r.instructions.empty()) {
    Instruction ins;
    ins.original_text = kEmptyStep;
    Task task;
    task.action = kUnknownAction;
    task.objects.push_back(TaskObject{std::string(role::kObject), std::string(kUnresolvedObject)});
    ins.tasks.push_back(std::move(task));
    r.instructions.push_back(std::move(ins));
    flag("instructions[0]", "every step is blank");
  }

  // Placeholder objects are intentionally undeclared; the segmenter already
  // flagged them, so only new violations are folded in.
  ValidationContext ctx;
  ctx.lexicon = lexicons.allergens ? &*lexicons.allergens : nullptr;
  for (const auto& v : validate_recipe(r, ctx)) {
    if (v.code == ViolationCode::kUndeclaredIngredient && v.path.ends_with("[" + std::string(kUnresolvedObject) + "]")) {
      continue;
    }
    flag(v.path, std::string(to_string(v.code)) + ": " + v.message);
  }
  return report;
}

nlohmann::json report_to_json(const IngestReport& report) {
  nlohmann::json unresolved = nlohmann::json::array();
  for (const auto& u : report.unresolved) unresolved.push_back({{"field_path", u.field_path}, {"reason", u.reason}});
  return {{"draft", recipe_to_json(report.draft)}, {"unresolved", std::move(unresolved)}};
}

}  // namespace r3::ingest
