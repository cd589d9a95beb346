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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "r3/core/quantity.hpp"

namespace r3 {

inline constexpr int kR3Version = 1;

struct AllergenInfo {
  int allergen_id = 0;
  std::string category;
  std::string source_ref;
  std::string kg_ref;  // opaque knowledge-graph reference

  friend bool operator==(const AllergenInfo&, const AllergenInfo&) = default;
};

struct Ingredient {
  std::string name;
  Quantity quantity;
  std::vector<AllergenInfo> allergens;
  std::vector<std::string> alternatives;
  std::optional<std::string> quality_characteristic;  // "grated", "sliced"
  std::optional<std::string> image_ref;

  friend bool operator==(const Ingredient&, const Ingredient&) = default;
};

namespace role {
inline constexpr std::string_view kSubject = "subject";
inline constexpr std::string_view kObject = "object";
inline constexpr std::string_view kWith = "with";
bool is_valid(std::string_view r);
}  // namespace role

struct TaskObject {
  std::string role{role::kObject};
  std::string name;

  friend bool operator==(const TaskObject&, const TaskObject&) = default;
};

struct Failure {
  std::string description;
  std::optional<std::string> workaround;

  friend bool operator==(const Failure&, const Failure&) = default;
};

/// One atomic cooking action.
struct Task {
  std::string action;
  std::vector<TaskObject> objects;
  std::optional<std::string> output_quality;
  std::vector<std::string> tools;
  std::vector<Failure> failures;

  friend bool operator==(const Task&, const Task&) = default;
};

struct Instruction {
  std::string original_text;
  std::vector<std::string> input_condition;
  std::vector<std::string> output_condition;
  std::vector<Task> tasks;
  std::vector<std::string> modality;  // media paths relative to the corpus root

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct Recipe {
  std::string id;
  std::string name;
  std::optional<std::string> cuisine;
  std::int64_t prep_time = 0;  // minutes
  std::int64_t cook_time = 0;  // minutes
  std::int64_t servings = 1;
  std::vector<Ingredient> ingredients;
  std::vector<Instruction> instructions;

  std::int64_t total_time() const { return prep_time + cook_time; }
  std::size_t task_count() const;
  const Ingredient* find_ingredient(std::string_view name) const;
  // Images of the finished dish: the modality of the last instruction.
  const std::vector<std::string>& dish_images() const;

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

enum class StepUnit { kTask, kInstruction };

std::size_t step_count(const Recipe& recipe, StepUnit unit);
std::string_view to_string(StepUnit unit);
std::optional<StepUnit> parse_step_unit(std::string_view s);

}  // namespace r3
