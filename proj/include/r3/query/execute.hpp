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

#include <span>
#include <string>
#include <vector>

#include "r3/core/corpus.hpp"
#include "r3/query/descriptor.hpp"
#include "r3/query/query.hpp"

namespace r3::query {

struct Match {
  std::string id;
  double score = 0.0;

  friend bool operator==(const Match&, const Match&) = default;
};

struct RetrievalResult {
  std::vector<Match> matches;  // score descending, ties by id ascending
  std::vector<Query> query_echo;
  std::vector<std::string> notes;  // per-recipe skips (missing media)

  std::vector<std::string> ids() const;
};

struct ExecuteOptions {
  StepUnit step_unit = StepUnit::kTask;
  const DescriptorProvider* descriptors = nullptr;  // default grid provider when null
};

/// Runs a conjunction of queries: a recipe matches when every query holds,
/// and its score is the minimum of the member scores. Filters (length,
/// time, exclusions) score 1.0.
RetrievalResult execute(std::span<const Query> conjunction, const Corpus& corpus, const ExecuteOptions& options = {});
RetrievalResult execute(const Query& query, const Corpus& corpus, const ExecuteOptions& options = {});

}  // namespace r3::query
