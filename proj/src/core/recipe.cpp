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

#include "r3/core/recipe.hpp"

namespace r3 {

bool role::is_valid(std::string_view r) { return r == kSubject || r == kObject || r == kWith; }

std::size_t Recipe::task_count() const {
  std::size_t n = 0;
  for (const auto& instruction : instructions) n += instruction.tasks.size();
  return n;
}

const Ingredient* Recipe::find_ingredient(std::string_view ingredient_name) const {
  for (const auto& ingredient : ingredients) {
    if (ingredient.name == ingredient_name) return &ingredient;
  }
  return nullptr;
}

const std::vector<std::string>& Recipe::dish_images() const {
  static const std::vector<std::string> kNone;
  return instructions.empty() ? kNone : instructions.back().modality;
}

std::size_t step_count(const Recipe& recipe, StepUnit unit) {
  return unit == StepUnit::kTask ? recipe.task_count() : recipe.instructions.size();
}

std::string_view to_string(StepUnit unit) { return unit == StepUnit::kTask ? "task" : "instruction"; }

std::optional<StepUnit> parse_step_unit(std::string_view s) {
  if (s == "task") return StepUnit::kTask;
  if (s == "instruction") return StepUnit::kInstruction;
  return std::nullopt;
}

}  // namespace r3
