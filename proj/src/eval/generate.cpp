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

#include "r3/eval/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"

namespace r3::eval {

using query::QueryKind;

namespace {

// Portable uniform integer in [0, n): std::uniform_int_distribution is
// implementation-defined, mt19937_64 output is not.
std::size_t bounded(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t range = n;
  const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return static_cast<std::size_t>(x % range);
  }
}

}  // namespace

std::map<QueryKind, std::vector<std::string>> query_value_pools(const Corpus& corpus) {
  std::map<QueryKind, std::set<std::string>> sets;
  if (!corpus.empty()) {
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& r : corpus.recipes()) {
      lo = std::min(lo, r.task_count());
      hi = std::max(hi, r.task_count());
    }
    for (std::size_t n = lo; n <= hi; ++n) sets[QueryKind::kLengthAtMost].insert(std::to_string(n));
  }
  for (const auto& r : corpus.recipes()) {
    sets[QueryKind::kTimeAtMost].insert(std::to_string(r.total_time()));
    sets[QueryKind::kNameMatch].insert(text::normalize_key(r.name));
    if (r.cuisine) sets[QueryKind::kCuisineMatch].insert(*r.cuisine);
    for (const auto& ing : r.ingredients) {
      sets[QueryKind::kIngredientInclude].insert(ing.name);
      sets[QueryKind::kIngredientExclude].insert(ing.name);
      for (const auto& a : ing.allergens) sets[QueryKind::kAllergenExcludeExplicit].insert(a.category);
      if (ing.image_ref && corpus.image(*ing.image_ref) != nullptr) {
        sets[QueryKind::kImageIngredient].insert(*ing.image_ref);
      }
    }
    for (const auto& ref : r.dish_images()) {
      if (corpus.image(ref) != nullptr) sets[QueryKind::kImageDish].insert(ref);
    }
  }
  std::map<QueryKind, std::vector<std::string>> pools;
  for (auto& [kind, values] : sets) {
    if (values.empty()) continue;
    std::vector<std::string> v(values.begin(), values.end());
    if (query::required_param(kind) == query::Param::kNumeric) {
      std::sort(v.begin(), v.end(), [](const std::string& a, const std::string& b) { return std::stoll(a) < std::stoll(b); });
    }
    pools.emplace(kind, std::move(v));
  }
  return pools;
}

query::Query make_query(QueryKind kind, const std::string& value, const Corpus& corpus, double threshold) {
  switch (query::required_param(kind)) {
    case query::Param::kNumeric: return query::Query::numeric(kind, std::stoll(value));
    case query::Param::kText: return query::Query::textual(kind, value, threshold);
    case query::Param::kImage: {
      auto img = corpus.image_handle(value);
      if (!img) throw Error(ErrorCode::kNotFound, "image asset not in corpus", value);
      return query::Query::image(kind, std::move(img), value, threshold);
    }
  }
  throw Error(ErrorCode::kUnknownKind, "unhandled query kind");
}

Generation generate_queries(std::uint64_t seed, std::size_t n, const Corpus& corpus) {
  if (corpus.empty()) throw Error(ErrorCode::kInvalidArgument, "cannot generate queries over an empty corpus");
  const auto pools = query_value_pools(corpus);
  std::vector<QueryKind> kinds;
  std::size_t distinct = 0;
  for (const auto& [kind, values] : pools) {
    kinds.push_back(kind);
    distinct += values.size();
  }

  Generation gen;
  std::mt19937_64 rng(seed);
  std::set<std::pair<QueryKind, std::string>> used;
  const std::size_t target = std::min(n, distinct);
  while (gen.queries.size() < target) {
    const QueryKind kind = kinds[bounded(rng, kinds.size())];
    const auto& pool = pools.at(kind);
    const std::string& value = pool[bounded(rng, pool.size())];
    if (!used.emplace(kind, value).second) continue;
    auto q = make_query(kind, value, corpus);
    gen.queries.push_back(GeneratedQuery{query::query_key(q), std::move(q)});
  }
  if (target < n) {
    gen.warnings.push_back("value pools exhausted: generated " + std::to_string(target) + " of " +
                           std::to_string(n) + " requested queries");
  }
  return gen;
}

}  // namespace r3::eval
