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

#include "r3/query/query.hpp"

namespace r3::query {

/// Human-readable list of the utterance templates parse_text_query accepts.
const std::vector<std::string>& supported_templates();

/// Template grammar over the case-folded utterance. Clauses are joined by
/// "and" when the next clause starts with a template keyword, so names such
/// as "macaroni and cheese" stay whole. A leading request phrase ("give me
/// a recipe", "suggest me a recipe that is") is ignored.
///
/// Throws Error{kNoTemplate} naming the unmatched clause; the message lists
/// the supported templates.
std::vector<Query> parse_text_query(std::string_view utterance, double threshold = kDefaultThreshold);

}  // namespace r3::query
