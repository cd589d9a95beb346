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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "r3/eval/baseline.hpp"
#include "r3/eval/generate.hpp"
#include "r3/eval/ground_truth.hpp"
#include "r3/query/execute.hpp"

namespace r3::eval {

struct QueryScore {
  std::string query_id;
  query::QueryKind kind;
  double cvg = 0.0;
  double iou = 0.0;
  std::size_t retrieved = 0;
  std::size_t relevant = 0;
};

struct Aggregate {
  std::size_t count = 0;
  double mean_cvg = 0.0;
  double mean_iou = 0.0;
};

struct EvalReport {
  Retriever retriever = Retriever::kProposed;
  std::vector<QueryScore> per_query;  // sorted by query id
  std::map<query::QueryKind, Aggregate> per_kind;
  std::optional<Aggregate> overall;  // absent when there are no queries
};

IdSet retrieve(Retriever retriever, const query::Query& q, const Corpus& corpus, const RawCorpus& raw,
               const query::ExecuteOptions& options = {});

/// Scores every query against its ground truth. Means are unweighted over
/// the queries of a kind (and over all queries for `overall`), accumulated
/// in query-id order so the report does not depend on input order.
/// Throws Error{kMissingTruth} before scoring when any query id lacks truth.
EvalReport run_eval(Retriever retriever, std::span<const GeneratedQuery> queries, const GroundTruth& truth,
                    const Corpus& corpus, const RawCorpus& raw, const query::ExecuteOptions& options = {});

nlohmann::json report_to_json(const EvalReport& report);

/// Plain-text tables: per-kind results for each report, and when both a
/// proposed and a baseline report are given, the overall comparison and the
/// explicit/implicit allergen split.
std::string format_tables(std::span<const EvalReport> reports);

}  // namespace r3::eval
