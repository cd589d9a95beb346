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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "r3/core/corpus.hpp"
#include "r3/query/query.hpp"

namespace r3::eval {

inline constexpr std::size_t kDefaultQueryCount = 50;

struct GeneratedQuery {
  std::string id;  // query_key of the query
  query::Query query;
};

struct Generation {
  std::vector<GeneratedQuery> queries;
  std::vector<std::string> warnings;
};

/// Candidate values per kind, drawn from the corpus: the task-count range,
/// distinct total times, allergen categories present, ingredient names,
/// recipe names, cuisines, ingredient image assets and final-dish image
/// assets. Numbers are rendered as decimal strings. Kinds with no values
/// are absent.
std::map<query::QueryKind, std::vector<std::string>> query_value_pools(const Corpus& corpus);

query::Query make_query(query::QueryKind kind, const std::string& value, const Corpus& corpus,
                        double threshold = query::kDefaultThreshold);

/// Two-stage sampling: a kind uniformly among kinds with values, then a
/// value uniformly from that kind's pool. Duplicate (kind, value) draws are
/// rejected and redrawn. When the pools hold fewer than n distinct pairs,
/// all of them are returned with a warning. Deterministic for a seed on
/// every platform (mt19937_64 with rejection-based bounding).
Generation generate_queries(std::uint64_t seed, std::size_t n, const Corpus& corpus);

}  // namespace r3::eval
