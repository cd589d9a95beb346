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

#include <string>
#include <string_view>
#include <vector>

#include "r3/core/recipe.hpp"
#include "r3/core/validate.hpp"

namespace r3 {

struct PlanStep {
  std::size_t index = 0;
  std::string action;
  std::vector<std::string> parameters;
  std::vector<std::string> preconditions;
  std::vector<std::string> effects;

  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

struct PlanTrace {
  std::vector<PlanStep> steps;

  friend bool operator==(const PlanTrace&, const PlanTrace&) = default;
};

/// One step per task, in instruction order then task order. Parameters are
/// the task objects' names; preconditions and effects are the enclosing
/// instruction's input and output conditions. Throws Error{kValidation}
/// when the recipe has violations.
PlanTrace export_plan(const Recipe& recipe, const ValidationContext& context = {});

// One line per step:
//   <index>: (<action> <param>*) ; pre={<p>, ...} post={<p>, ...}
// Atoms outside [a-z0-9_.-] are double-quoted with \" and \\ escapes.
std::string format_plan(const PlanTrace& plan);
PlanTrace parse_plan(std::string_view text);

}  // namespace r3
