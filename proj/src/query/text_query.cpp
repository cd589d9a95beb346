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

#include "r3/query/text_query.hpp"

#include <regex>

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"

namespace r3::query {

namespace {

const std::regex& clause_split() {
  static const std::regex re(
      R"(\s+and\s+(?=(?:(?:is|are|has|have|that|which|it|can)\s+)*(?:without|with|less|fewer|in|completed|named|called|recipes?\s+for|from)\b))");
  return re;
}

std::string strip_request(std::string clause) {
  static const std::regex request(
      R"(^(?:please\s+)?(?:(?:give|show|find|suggest|get|recommend)\s+(?:me\s+)?|i\s+(?:want|need)\s+)?)");
  static const std::regex article(R"(^(?:an?|some|the|any)\s+)");
  clause = std::regex_replace(clause, request, "", std::regex_constants::format_first_only);
  clause = std::regex_replace(clause, article, "", std::regex_constants::format_first_only);
  return clause;
}

std::string strip_subject(std::string clause) {
  static const std::regex subject(R"(^recipes?\b\s*)");
  static const std::regex connective(R"(^(?:(?:that|which|it)\s+)?(?:(?:is|are|has|have|can\s+be)\s+)?)");
  clause = std::regex_replace(clause, subject, "", std::regex_constants::format_first_only);
  clause = std::regex_replace(clause, connective, "", std::regex_constants::format_first_only);
  return clause;
}

std::int64_t parse_count(const std::string& digits, const std::string& clause) {
  if (digits.size() > 9) throw Error(ErrorCode::kNoTemplate, "number too large in clause '" + clause + "'", clause);
  return std::stoll(digits);
}

Query parse_clause(const std::string& raw, double threshold) {
  static const std::regex recipe_for(R"(^recipes?\s+for\s+(.+)$)");
  static const std::regex allergen(R"(^without\s+(?:the\s+|any\s+)?(.+?)\s+allerg(?:en|ens|y|ies)$)");
  static const std::regex exclude(R"(^without\s+(?:the\s+|any\s+)?(.+)$)");
  static const std::regex length(R"(^(?:with\s+)?(?:less|fewer)\s+than\s+(\d+)\s+steps?$)");
  static const std::regex time(R"(^(?:completed\s+)?in\s+(\d+)\s+minutes?$)");
  static const std::regex named(R"(^(?:named|called)\s+(.+)$)");
  static const std::regex cuisine(R"(^(?:from\s+)?(?:the\s+)?(.+?)\s+cuisine$)");
  static const std::regex include(R"(^(?:with|containing)\s+(.+)$)");

  std::smatch m;
  std::string clause = strip_request(raw);
  if (std::regex_match(clause, m, recipe_for)) return Query::textual(QueryKind::kNameMatch, m[1].str(), threshold);
  clause = strip_subject(clause);

  if (std::regex_match(clause, m, allergen)) {
    return Query::textual(QueryKind::kAllergenExcludeExplicit, m[1].str(), threshold);
  }
  if (std::regex_match(clause, m, exclude)) return Query::textual(QueryKind::kIngredientExclude, m[1].str(), threshold);
  if (std::regex_match(clause, m, length)) {
    const auto n = parse_count(m[1].str(), raw);
    if (n < 1) throw Error(ErrorCode::kNoTemplate, "'less than 0 steps' can never hold", raw);
    return Query::numeric(QueryKind::kLengthAtMost, n - 1);
  }
  if (std::regex_match(clause, m, time)) return Query::numeric(QueryKind::kTimeAtMost, parse_count(m[1].str(), raw));
  if (std::regex_match(clause, m, named)) return Query::textual(QueryKind::kNameMatch, m[1].str(), threshold);
  if (std::regex_match(clause, m, cuisine)) return Query::textual(QueryKind::kCuisineMatch, m[1].str(), threshold);
  if (std::regex_match(clause, m, include)) return Query::textual(QueryKind::kIngredientInclude, m[1].str(), threshold);

  std::string message = "no template matches '" + raw + "'; supported templates:";
  for (const auto& t : supported_templates()) message += "\n  " + t;
  throw Error(ErrorCode::kNoTemplate, message, raw);
}

}  // namespace

const std::vector<std::string>& supported_templates() {
  static const std::vector<std::string> templates = {
      "without <X> allergen          -> AllergenExcludeExplicit(X)",
      "without <X>                   -> IngredientExclude(X)",
      "with <X>                      -> IngredientInclude(X)",
      "with less than <N> steps      -> LengthAtMost(N-1)",
      "(completed) in <N> minutes    -> TimeAtMost(N)",
      "named <X> | recipe for <X>    -> NameMatch(X)",
      "<X> cuisine                   -> CuisineMatch(X)",
      "<clause> and <clause> ...     -> conjunction",
  };
  return templates;
}

std::vector<Query> parse_text_query(std::string_view utterance, double threshold) {
  std::string s = text::normalize_key(utterance);
  while (!s.empty() && (s.back() == '?' || s.back() == '.' || s.back() == '!')) s.pop_back();
  s = text::normalize_space(s);
  if (s.empty()) {
    std::string message = "empty utterance; supported templates:";
    for (const auto& t : supported_templates()) message += "\n  " + t;
    throw Error(ErrorCode::kNoTemplate, message);
  }

  std::vector<Query> out;
  std::sregex_token_iterator it(s.begin(), s.end(), clause_split(), -1);
  for (std::sregex_token_iterator end; it != end; ++it) {
    const std::string clause = text::normalize_space(it->str());
    if (!clause.empty()) out.push_back(parse_clause(clause, threshold));
  }
  return out;
}

}  // namespace r3::query
