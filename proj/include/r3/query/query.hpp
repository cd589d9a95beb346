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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "r3/media/image.hpp"

namespace r3::query {

inline constexpr double kDefaultThreshold = 0.7;

enum class QueryKind {
  kLengthAtMost,
  kTimeAtMost,
  kAllergenExcludeExplicit,
  kIngredientExclude,
  kIngredientInclude,
  kNameMatch,
  kCuisineMatch,
  kImageIngredient,
  kImageDish,
};

inline constexpr std::array kAllQueryKinds = {
    QueryKind::kLengthAtMost,      QueryKind::kTimeAtMost, QueryKind::kAllergenExcludeExplicit,
    QueryKind::kIngredientExclude, QueryKind::kIngredientInclude, QueryKind::kNameMatch,
    QueryKind::kCuisineMatch,      QueryKind::kImageIngredient,   QueryKind::kImageDish,
};

std::string_view to_string(QueryKind kind);
// Throws Error{kUnknownKind}.
QueryKind parse_query_kind(std::string_view name);

enum class Param { kNumeric, kText, kImage };
Param required_param(QueryKind kind);

// Process constraints filter on length and time; everything else is an
// outcome constraint.
bool is_process_constraint(QueryKind kind);
// Kinds that keep a recipe when some field scores at or above the threshold.
bool is_inclusive_similarity(QueryKind kind);
// Kinds that drop a recipe when some field scores at or above the threshold.
bool is_exclusive_similarity(QueryKind kind);

struct Query {
  QueryKind kind = QueryKind::kNameMatch;
  std::optional<std::string> text_param;
  std::optional<std::int64_t> numeric_param;
  std::shared_ptr<const media::Image> image_param;
  std::optional<std::string> image_ref;  // label echoed back for image queries
  double threshold = kDefaultThreshold;

  static Query numeric(QueryKind kind, std::int64_t n);
  static Query textual(QueryKind kind, std::string text, double threshold = kDefaultThreshold);
  static Query image(QueryKind kind, std::shared_ptr<const media::Image> img, std::string ref,
                     double threshold = kDefaultThreshold);

  friend bool operator==(const Query& a, const Query& b);
};

/// Throws Error{kInvalidQuery} unless exactly the parameter demanded by the
/// kind is present and the threshold lies in [0,1].
void validate_query(const Query& q);

/// Stable identifier "<Kind>:<value>" used as query id in ground truth.
std::string query_key(const Query& q);

nlohmann::json query_to_json(const Query& q);
// Image payloads are not carried in JSON; image kinds come back with
// image_param unset and must be bound by the caller.
Query query_from_json(const nlohmann::json& j, double default_threshold = kDefaultThreshold);
std::vector<Query> queries_from_json(const nlohmann::json& j, double default_threshold = kDefaultThreshold);

}  // namespace r3::query
