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

#include "r3/query/execute.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "r3/common/error.hpp"
#include "r3/query/levenshtein.hpp"

namespace r3::query {

namespace {

using Scores = std::map<std::string, double>;

class Evaluator {
 public:
  Evaluator(const Corpus& corpus, const ExecuteOptions& options, std::vector<std::string>& notes)
      : corpus_(corpus),
        options_(options),
        provider_(options.descriptors ? *options.descriptors : default_descriptor_provider()),
        notes_(notes) {}

  Scores run(const Query& q) {
    validate_query(q);
    Scores out;
    std::optional<Descriptor> query_descriptor;
    if (required_param(q.kind) == Param::kImage) query_descriptor = provider_.describe(*q.image_param);

    for (const auto& r : corpus_.recipes()) {
      std::optional<double> score;
      switch (q.kind) {
        case QueryKind::kLengthAtMost:
          if (static_cast<std::int64_t>(step_count(r, options_.step_unit)) <= *q.numeric_param) score = 1.0;
          break;
        case QueryKind::kTimeAtMost:
          if (r.total_time() <= *q.numeric_param) score = 1.0;
          break;
        case QueryKind::kAllergenExcludeExplicit:
          if (!has_allergen(r, *q.text_param, q.threshold)) score = 1.0;
          break;
        case QueryKind::kIngredientExclude:
          if (!has_ingredient(r, *q.text_param, q.threshold)) score = 1.0;
          break;
        case QueryKind::kIngredientInclude: {
          double best = 0.0;
          for (const auto& ing : r.ingredients) best = std::max(best, levenshtein_similarity(ing.name, *q.text_param));
          if (!r.ingredients.empty() && best >= q.threshold) score = best;
          break;
        }
        case QueryKind::kNameMatch: {
          const double s = levenshtein_similarity(r.name, *q.text_param);
          if (s >= q.threshold) score = s;
          break;
        }
        case QueryKind::kCuisineMatch:
          if (r.cuisine) {
            const double s = levenshtein_similarity(*r.cuisine, *q.text_param);
            if (s >= q.threshold) score = s;
          }
          break;
        case QueryKind::kImageIngredient: {
          std::vector<std::string> refs;
          for (const auto& ing : r.ingredients) {
            if (ing.image_ref) refs.push_back(*ing.image_ref);
          }
          score = best_image(r, refs, *query_descriptor, q.threshold);
          break;
        }
        case QueryKind::kImageDish:
          score = best_image(r, r.dish_images(), *query_descriptor, q.threshold);
          break;
      }
      if (score) out.emplace(r.id, *score);
    }
    return out;
  }

 private:
  static bool has_allergen(const Recipe& r, const std::string& category, double threshold) {
    for (const auto& ing : r.ingredients) {
      for (const auto& a : ing.allergens) {
        if (levenshtein_similarity(a.category, category) >= threshold) return true;
      }
    }
    return false;
  }

  static bool has_ingredient(const Recipe& r, const std::string& name, double threshold) {
    for (const auto& ing : r.ingredients) {
      if (levenshtein_similarity(ing.name, name) >= threshold) return true;
      for (const auto& alt : ing.alternatives) {
        if (levenshtein_similarity(alt, name) >= threshold) return true;
      }
    }
    return false;
  }

  std::optional<double> best_image(const Recipe& r, const std::vector<std::string>& refs, const Descriptor& query,
                                   double threshold) {
    std::optional<double> best;
    for (const auto& ref : refs) {
      const Descriptor* d = descriptor(ref);
      if (d == nullptr) {
        notes_.push_back("skipped media '" + ref + "' of recipe '" + r.id + "': not available");
        continue;
      }
      const double s = descriptor_similarity(query, *d);
      if (!best || s > *best) best = s;
    }
    if (best && *best >= threshold) return best;
    return std::nullopt;
  }

  const Descriptor* descriptor(const std::string& ref) {
    if (const auto it = cache_.find(ref); it != cache_.end()) return it->second ? &*it->second : nullptr;
    std::optional<Descriptor> d;
    if (const auto* img = corpus_.image(ref)) d = provider_.describe(*img);
    const auto [it, inserted] = cache_.emplace(ref, std::move(d));
    return it->second ? &*it->second : nullptr;
  }

  const Corpus& corpus_;
  const ExecuteOptions& options_;
  const DescriptorProvider& provider_;
  std::vector<std::string>& notes_;
  std::map<std::string, std::optional<Descriptor>> cache_;
};

}  // namespace

std::vector<std::string> RetrievalResult::ids() const {
  std::vector<std::string> out;
  out.reserve(matches.size());
  for (const auto& m : matches) out.push_back(m.id);
  return out;
}

RetrievalResult execute(std::span<const Query> conjunction, const Corpus& corpus, const ExecuteOptions& options) {
  if (conjunction.empty()) throw Error(ErrorCode::kInvalidQuery, "empty query conjunction");
  RetrievalResult result;
  result.query_echo.assign(conjunction.begin(), conjunction.end());
  Evaluator evaluator(corpus, options, result.notes);

  std::optional<Scores> combined;
  for (const auto& q : conjunction) {
    Scores s = evaluator.run(q);
    if (!combined) {
      combined = std::move(s);
      continue;
    }
    Scores next;
    for (const auto& [id, score] : *combined) {
      if (const auto it = s.find(id); it != s.end()) next.emplace(id, std::min(score, it->second));
    }
    combined = std::move(next);
  }
  for (const auto& [id, score] : *combined) result.matches.push_back(Match{id, score});
  std::stable_sort(result.matches.begin(), result.matches.end(), [](const Match& a, const Match& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  std::sort(result.notes.begin(), result.notes.end());
  result.notes.erase(std::unique(result.notes.begin(), result.notes.end()), result.notes.end());
  return result;
}

RetrievalResult execute(const Query& query, const Corpus& corpus, const ExecuteOptions& options) {
  return execute(std::span<const Query>(&query, 1), corpus, options);
}

}  // namespace r3::query
