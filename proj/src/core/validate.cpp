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

#include "r3/core/validate.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "r3/allergen/lexicon.hpp"
#include "r3/common/text.hpp"

namespace r3 {

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::kMissingId: return "MISSING_ID";
    case ViolationCode::kMissingName: return "MISSING_NAME";
    case ViolationCode::kMissingIngredients: return "MISSING_INGREDIENTS";
    case ViolationCode::kMissingInstructions: return "MISSING_INSTRUCTIONS";
    case ViolationCode::kNegativeTime: return "NEGATIVE_TIME";
    case ViolationCode::kInvalidServings: return "INVALID_SERVINGS";
    case ViolationCode::kEmptyIngredientName: return "EMPTY_INGREDIENT_NAME";
    case ViolationCode::kIngredientNameNotNormalized: return "INGREDIENT_NAME_NOT_NORMALIZED";
    case ViolationCode::kDuplicateIngredient: return "DUPLICATE_INGREDIENT";
    case ViolationCode::kAlternativeIsSelf: return "ALTERNATIVE_IS_SELF";
    case ViolationCode::kNegativeMeasure: return "NEGATIVE_MEASURE";
    case ViolationCode::kUnknownUnit: return "UNKNOWN_UNIT";
    case ViolationCode::kUnknownAllergenCategory: return "UNKNOWN_ALLERGEN_CATEGORY";
    case ViolationCode::kAllergenIdMismatch: return "ALLERGEN_ID_MISMATCH";
    case ViolationCode::kEmptyOriginalText: return "EMPTY_ORIGINAL_TEXT";
    case ViolationCode::kMissingTasks: return "MISSING_TASKS";
    case ViolationCode::kEmptyAction: return "EMPTY_ACTION";
    case ViolationCode::kActionNotLowercase: return "ACTION_NOT_LOWERCASE";
    case ViolationCode::kMissingTaskObjects: return "MISSING_TASK_OBJECTS";
    case ViolationCode::kInvalidObjectRole: return "INVALID_OBJECT_ROLE";
    case ViolationCode::kUndeclaredIngredient: return "UNDECLARED_INGREDIENT";
    case ViolationCode::kEmptyFailureDescription: return "EMPTY_FAILURE_DESCRIPTION";
    case ViolationCode::kMissingMedia: return "MISSING_MEDIA";
  }
  return "UNKNOWN";
}

std::vector<std::string> predicate_terms(std::string_view predicate) {
  const std::string p = text::normalize_key(predicate);
  const auto open = p.find('(');
  const auto close = p.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    return p.empty() ? std::vector<std::string>{} : std::vector<std::string>{p};
  }
  std::vector<std::string> terms;
  std::string_view args(p);
  args = args.substr(open + 1, close - open - 1);
  std::size_t start = 0;
  while (start <= args.size()) {
    const auto comma = args.find(',', start);
    const auto end = comma == std::string_view::npos ? args.size() : comma;
    auto term = text::normalize_space(args.substr(start, end - start));
    if (!term.empty()) terms.push_back(std::move(term));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return terms;
}

namespace {

bool readable(const std::filesystem::path& p) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(p, ec)) return false;
  std::ifstream in(p, std::ios::binary);
  return static_cast<bool>(in);
}

class Collector {
 public:
  void add(ViolationCode code, std::string path, std::string message) {
    out_.push_back(Violation{code, std::move(path), std::move(message)});
  }
  std::vector<Violation> finish() && {
    std::sort(out_.begin(), out_.end());
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return std::move(out_);
  }

 private:
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate_recipe(const Recipe& r, const ValidationContext& ctx) {
  Collector v;
  const std::string& rid = r.id;

  if (r.id.empty()) v.add(ViolationCode::kMissingId, "id", "recipe id is empty");
  if (r.name.empty()) v.add(ViolationCode::kMissingName, "name", "recipe name is empty");
  if (r.prep_time < 0) v.add(ViolationCode::kNegativeTime, "prep_time", "prep_time is negative");
  if (r.cook_time < 0) v.add(ViolationCode::kNegativeTime, "cook_time", "cook_time is negative");
  if (r.servings <= 0) v.add(ViolationCode::kInvalidServings, "servings", "servings must be positive");
  if (r.ingredients.empty()) v.add(ViolationCode::kMissingIngredients, "ingredients", "recipe has no ingredients");
  if (r.instructions.empty()) v.add(ViolationCode::kMissingInstructions, "instructions", "recipe has no instructions");

  std::set<std::string> declared;
  for (const auto& ing : r.ingredients) {
    const std::string path = "ingredients[" + ing.name + "]";
    if (ing.name.empty()) {
      v.add(ViolationCode::kEmptyIngredientName, path, "ingredient name is empty");
    } else if (ing.name != text::normalize_key(ing.name)) {
      v.add(ViolationCode::kIngredientNameNotNormalized, path, "ingredient name '" + ing.name + "' is not normalized");
    }
    if (!declared.insert(ing.name).second) {
      v.add(ViolationCode::kDuplicateIngredient, path, "ingredient '" + ing.name + "' declared twice");
    }
    if (std::find(ing.alternatives.begin(), ing.alternatives.end(), ing.name) != ing.alternatives.end()) {
      v.add(ViolationCode::kAlternativeIsSelf, path + ".alternatives", "ingredient lists itself as an alternative");
    }
    if (ing.quantity.measure.is_negative()) {
      v.add(ViolationCode::kNegativeMeasure, path + ".quantity.measure", "measure is negative");
    }
    if (!is_canonical_unit(ing.quantity.unit)) {
      v.add(ViolationCode::kUnknownUnit, path + ".quantity.unit", "unit '" + ing.quantity.unit + "' is not canonical");
    }
    if (ctx.lexicon != nullptr) {
      for (const auto& a : ing.allergens) {
        const std::string apath = path + ".allergens[" + a.category + "]";
        const auto* cls = ctx.lexicon->find_category(a.category);
        if (cls == nullptr) {
          v.add(ViolationCode::kUnknownAllergenCategory, apath,
                "allergen category '" + a.category + "' is not in the lexicon");
        } else if (cls->allergen_id != a.allergen_id) {
          v.add(ViolationCode::kAllergenIdMismatch, apath,
                "allergen_id " + std::to_string(a.allergen_id) + " does not match lexicon id " +
                    std::to_string(cls->allergen_id));
        }
      }
    }
  }

  std::set<std::string> tools;
  for (const auto& ins : r.instructions) {
    for (const auto& t : ins.tasks) tools.insert(t.tools.begin(), t.tools.end());
  }

  std::set<std::string> intermediates;
  for (std::size_t i = 0; i < r.instructions.size(); ++i) {
    const auto& ins = r.instructions[i];
    const std::string ipath = "instructions[" + std::to_string(i) + "]";
    for (const auto& cond : ins.output_condition) {
      for (auto& term : predicate_terms(cond)) intermediates.insert(std::move(term));
    }
    if (text::normalize_space(ins.original_text).empty()) {
      v.add(ViolationCode::kEmptyOriginalText, ipath + ".original_text", "original_text is empty");
    }
    if (ins.tasks.empty()) v.add(ViolationCode::kMissingTasks, ipath + ".tasks", "instruction has no tasks");
    if (ctx.media_root) {
      for (const auto& m : ins.modality) {
        if (!readable(*ctx.media_root / m)) {
          v.add(ViolationCode::kMissingMedia, ipath + ".modality", "media file '" + m + "' is not readable");
        }
      }
    }
    for (std::size_t k = 0; k < ins.tasks.size(); ++k) {
      const auto& t = ins.tasks[k];
      const std::string tpath = ipath + ".tasks[" + std::to_string(k) + "]";
      if (t.action.empty()) {
        v.add(ViolationCode::kEmptyAction, tpath + ".action", "task action is empty");
      } else if (t.action != text::casefold(t.action)) {
        v.add(ViolationCode::kActionNotLowercase, tpath + ".action", "task action '" + t.action + "' is not lowercase");
      }
      if (t.objects.empty()) v.add(ViolationCode::kMissingTaskObjects, tpath + ".objects", "task has no objects");
      for (const auto& o : t.objects) {
        if (!role::is_valid(o.role)) {
          v.add(ViolationCode::kInvalidObjectRole, tpath + ".objects[" + o.name + "]",
                "role '" + o.role + "' is not subject|object|with");
        }
        if (!declared.contains(o.name) && !tools.contains(o.name) && !intermediates.contains(o.name)) {
          v.add(ViolationCode::kUndeclaredIngredient, tpath + ".objects[" + o.name + "]",
                "recipe '" + rid + "' references ingredient '" + o.name + "' missing from its ingredient list");
        }
      }
      for (const auto& f : t.failures) {
        if (f.description.empty()) {
          v.add(ViolationCode::kEmptyFailureDescription, tpath + ".failures", "failure description is empty");
        }
      }
    }
  }
  return std::move(v).finish();
}

}  // namespace r3
