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

#include <cstddef>
#include <string_view>

namespace r3::query {

// Unit-cost insert/delete/substitute distance over Unicode code points.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);

/// 1 - d(a,b) / max(|a|,|b|) over case-folded, whitespace-normalized
/// strings, lengths in code points. 1.0 when both are empty.
double levenshtein_similarity(std::string_view a, std::string_view b);

}  // namespace r3::query
