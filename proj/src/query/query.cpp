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

#include "r3/query/query.hpp"

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"

namespace r3::query {

std::string_view to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::kLengthAtMost: return "LengthAtMost";
    case QueryKind::kTimeAtMost: return "TimeAtMost";
    case QueryKind::kAllergenExcludeExplicit: return "AllergenExcludeExplicit";
    case QueryKind::kIngredientExclude: return "IngredientExclude";
    case QueryKind::kIngredientInclude: return "IngredientInclude";
    case QueryKind::kNameMatch: return "NameMatch";
    case QueryKind::kCuisineMatch: return "CuisineMatch";
    case QueryKind::kImageIngredient: return "ImageIngredient";
    case QueryKind::kImageDish: return "ImageDish";
  }
  return "Unknown";
}

QueryKind parse_query_kind(std::string_view name) {
  for (auto kind : kAllQueryKinds) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::kUnknownKind, "unknown query kind '" + std::string(name) + "'", std::string(name));
}

Param required_param(QueryKind kind) {
  switch (kind) {
    case QueryKind::kLengthAtMost:
    case QueryKind::kTimeAtMost: return Param::kNumeric;
    case QueryKind::kImageIngredient:
    case QueryKind::kImageDish: return Param::kImage;
    default: return Param::kText;
  }
}

bool is_process_constraint(QueryKind kind) {
  return kind == QueryKind::kLengthAtMost || kind == QueryKind::kTimeAtMost;
}

bool is_inclusive_similarity(QueryKind kind) {
  return kind == QueryKind::kIngredientInclude || kind == QueryKind::kNameMatch ||
         kind == QueryKind::kCuisineMatch || kind == QueryKind::kImageIngredient || kind == QueryKind::kImageDish;
}

bool is_exclusive_similarity(QueryKind kind) {
  return kind == QueryKind::kAllergenExcludeExplicit || kind == QueryKind::kIngredientExclude;
}

Query Query::numeric(QueryKind kind, std::int64_t n) {
  Query q;
  q.kind = kind;
  q.numeric_param = n;
  return q;
}

Query Query::textual(QueryKind kind, std::string text, double threshold) {
  Query q;
  q.kind = kind;
  q.text_param = text::normalize_key(text);
  q.threshold = threshold;
  return q;
}

Query Query::image(QueryKind kind, std::shared_ptr<const media::Image> img, std::string ref, double threshold) {
  Query q;
  q.kind = kind;
  q.image_param = std::move(img);
  q.image_ref = std::move(ref);
  q.threshold = threshold;
  return q;
}

bool operator==(const Query& a, const Query& b) {
  const bool same_image = a.image_param == b.image_param ||
                          (a.image_param && b.image_param && *a.image_param == *b.image_param);
  return a.kind == b.kind && a.text_param == b.text_param && a.numeric_param == b.numeric_param && same_image &&
         a.image_ref == b.image_ref && a.threshold == b.threshold;
}

void validate_query(const Query& q) {
  const std::string kind(to_string(q.kind));
  auto fail = [&](const std::string& what) { throw Error(ErrorCode::kInvalidQuery, kind + ": " + what, kind); };
  if (!(q.threshold >= 0.0 && q.threshold <= 1.0)) fail("threshold must lie in [0,1]");
  switch (required_param(q.kind)) {
    case Param::kNumeric:
      if (!q.numeric_param) fail("numeric_param is required");
      if (*q.numeric_param < 0) fail("numeric_param must be non-negative");
      if (q.text_param || q.image_param) fail("only numeric_param is allowed");
      break;
    case Param::kText:
      if (!q.text_param) fail("text_param is required");
      if (q.numeric_param || q.image_param) fail("only text_param is allowed");
      break;
    case Param::kImage:
      if (!q.image_param) fail("image_param is required");
      if (q.numeric_param || q.text_param) fail("only image_param is allowed");
      break;
  }
}

std::string query_key(const Query& q) {
  std::string value;
  switch (required_param(q.kind)) {
    case Param::kNumeric: value = q.numeric_param ? std::to_string(*q.numeric_param) : ""; break;
    case Param::kText: value = q.text_param.value_or(""); break;
    case Param::kImage: value = q.image_ref.value_or("<upload>"); break;
  }
  return std::string(to_string(q.kind)) + ":" + value;
}

nlohmann::json query_to_json(const Query& q) {
  nlohmann::json j = {{"kind", to_string(q.kind)}, {"threshold", q.threshold}};
  if (q.text_param) j["text_param"] = *q.text_param;
  if (q.numeric_param) j["numeric_param"] = *q.numeric_param;
  if (q.image_ref) j["image_ref"] = *q.image_ref;
  return j;
}

Query query_from_json(const nlohmann::json& j, double default_threshold) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidQuery, "query must be a JSON object");
  const auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) throw Error(ErrorCode::kInvalidQuery, "query.kind is required");
  Query q;
  q.kind = parse_query_kind(kind_it->get<std::string>());
  q.threshold = default_threshold;
  try {
    if (const auto it = j.find("threshold"); it != j.end() && !it->is_null()) q.threshold = it->get<double>();
    if (const auto it = j.find("text_param"); it != j.end() && !it->is_null()) {
      q.text_param = text::normalize_key(it->get<std::string>());
    }
    if (const auto it = j.find("numeric_param"); it != j.end() && !it->is_null()) {
      q.numeric_param = it->get<std::int64_t>();
    }
    if (const auto it = j.find("image_ref"); it != j.end() && !it->is_null()) q.image_ref = it->get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidQuery, std::string("malformed query field: ") + e.what());
  }
  return q;
}

std::vector<Query> queries_from_json(const nlohmann::json& j, double default_threshold) {
  std::vector<Query> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(query_from_json(item, default_threshold));
  } else {
    out.push_back(query_from_json(j, default_threshold));
  }
  return out;
}

}  // namespace r3::query
