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

#include <optional>
#include <string>
#include <string_view>

#include "r3/core/quantity.hpp"

namespace r3::ingest {

struct ParsedIngredientLine {
  Quantity quantity;
  std::string name;                            // normalized key
  std::optional<std::string> quality;          // text after the first comma
  bool resolved = true;                        // false when no leading number
};

/// "1 1/2 cups flour, sifted" -> (3/2, cup, "flour", "sifted").
/// Leading measure: integer, decimal, a/b, mixed "1 1/2", or a unicode
/// vulgar fraction ("½", "1½"). An optional unit alias and "of" follow.
/// Lines without a leading number come back unresolved with measure 0,
/// unit unitless and the whole normalized line as the name.
ParsedIngredientLine parse_quantity(std::string_view line);

/// Inverse on the canonical side: "<mixed measure> [<unit>] <name>".
std::string format_quantity_line(const Quantity& quantity, std::string_view name);

}  // namespace r3::ingest
