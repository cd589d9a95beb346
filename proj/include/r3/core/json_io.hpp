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

#include "json.hpp"
#include "r3/core/recipe.hpp"

namespace r3 {

// Structural decode of an R3 document. Throws Error{kParse} whose detail is
// the field path of the first malformed field ("instructions[1].tasks[0].action").
// String fields are normalized here: matching keys are case-folded and
// whitespace-collapsed; original_text is kept verbatim.
Recipe recipe_from_json(const nlohmann::json& doc);
nlohmann::json recipe_to_json(const Recipe& recipe);

Recipe parse_recipe(std::string_view document);
// Canonical form: sorted keys, two-space indent, trailing newline, absent
// optionals omitted.
std::string serialize_recipe(const Recipe& recipe);

}  // namespace r3
