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

#include "r3/eval/report.hpp"

#include <algorithm>
#include <cstdio>

namespace r3::eval {

using query::QueryKind;

namespace {

Aggregate mean_of(const std::vector<const QueryScore*>& scores) {
  Aggregate a;
  a.count = scores.size();
  for (const auto* s : scores) {
    a.mean_cvg += s->cvg;
    a.mean_iou += s->iou;
  }
  if (a.count > 0) {
    a.mean_cvg /= static_cast<double>(a.count);
    a.mean_iou /= static_cast<double>(a.count);
  }
  return a;
}

nlohmann::json aggregate_json(const Aggregate& a) {
  return {{"count", a.count}, {"mean_cvg", a.mean_cvg}, {"mean_iou", a.mean_iou}};
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

struct Row {
  const char* group;
  const char* based_on;
  QueryKind kind;
};

constexpr Row kRows[] = {
    {"Process Constraint", "Length", QueryKind::kLengthAtMost},
    {"Process Constraint", "Time", QueryKind::kTimeAtMost},
    {"Outcome Constraint", "Ingredient", QueryKind::kIngredientInclude},
    {"Outcome Constraint", "Allergen (explicit)", QueryKind::kAllergenExcludeExplicit},
    {"Outcome Constraint", "Allergen (implicit)", QueryKind::kIngredientExclude},
    {"Outcome Constraint", "Name", QueryKind::kNameMatch},
    {"Outcome Constraint", "Cuisine", QueryKind::kCuisineMatch},
    {"Outcome Constraint", "Image (ingredient)", QueryKind::kImageIngredient},
    {"Outcome Constraint", "Image (dish)", QueryKind::kImageDish},
};

std::string cell(const EvalReport& r, QueryKind kind, bool cvg) {
  const auto it = r.per_kind.find(kind);
  if (it == r.per_kind.end()) return "-";
  return fixed2(cvg ? it->second.mean_cvg : it->second.mean_iou);
}

}  // namespace

IdSet retrieve(Retriever retriever, const query::Query& q, const Corpus& corpus, const RawCorpus& raw,
               const query::ExecuteOptions& options) {
  if (retriever == Retriever::kBaseline) return baseline_retrieve(q, raw);
  const auto ids = query::execute(q, corpus, options).ids();
  return IdSet(ids.begin(), ids.end());
}

EvalReport run_eval(Retriever retriever, std::span<const GeneratedQuery> queries, const GroundTruth& truth,
                    const Corpus& corpus, const RawCorpus& raw, const query::ExecuteOptions& options) {
  for (const auto& gq : queries) truth.at(gq.id);

  EvalReport report;
  report.retriever = retriever;
  for (const auto& gq : queries) {
    const IdSet& relevant = truth.at(gq.id);
    const IdSet got = retrieve(retriever, gq.query, corpus, raw, options);
    report.per_query.push_back(QueryScore{gq.id, gq.query.kind, cvg(got, relevant), iou(got, relevant), got.size(),
                                          relevant.size()});
  }
  std::stable_sort(report.per_query.begin(), report.per_query.end(),
                   [](const QueryScore& a, const QueryScore& b) { return a.query_id < b.query_id; });

  std::map<QueryKind, std::vector<const QueryScore*>> by_kind;
  std::vector<const QueryScore*> all;
  for (const auto& s : report.per_query) {
    by_kind[s.kind].push_back(&s);
    all.push_back(&s);
  }
  for (const auto& [kind, scores] : by_kind) report.per_kind.emplace(kind, mean_of(scores));
  if (!all.empty()) report.overall = mean_of(all);
  return report;
}

nlohmann::json report_to_json(const EvalReport& report) {
  nlohmann::json per_query = nlohmann::json::array();
  for (const auto& s : report.per_query) {
    per_query.push_back({{"query_id", s.query_id},
                         {"kind", query::to_string(s.kind)},
                         {"cvg", s.cvg},
                         {"iou", s.iou},
                         {"retrieved", s.retrieved},
                         {"relevant", s.relevant}});
  }
  nlohmann::json per_kind = nlohmann::json::object();
  for (const auto& [kind, agg] : report.per_kind) per_kind[std::string(query::to_string(kind))] = aggregate_json(agg);
  nlohmann::json j = {{"retriever", to_string(report.retriever)}, {"per_query", std::move(per_query)},
                      {"per_kind", std::move(per_kind)}};
  j["overall"] = report.overall ? aggregate_json(*report.overall) : nlohmann::json(nullptr);
  return j;
}

std::string format_tables(std::span<const EvalReport> reports) {
  std::string out;
  const EvalReport* proposed = nullptr;
  const EvalReport* baseline = nullptr;
  for (const auto& r : reports) {
    (r.retriever == Retriever::kProposed ? proposed : baseline) = &r;
    out += "Results (" + std::string(to_string(r.retriever)) + ", " + std::to_string(r.per_query.size()) +
           " queries)\n";
    out += pad("Query Type", 20) + pad("Based on", 22) + pad("N", 5) + pad("CVG", 7) + "IOU\n";
    for (const auto& row : kRows) {
      const auto it = r.per_kind.find(row.kind);
      const std::string n = it == r.per_kind.end() ? "0" : std::to_string(it->second.count);
      out += pad(row.group, 20) + pad(row.based_on, 22) + pad(n, 5) + pad(cell(r, row.kind, true), 7) +
             cell(r, row.kind, false) + "\n";
    }
    if (r.overall) {
      out += pad("Overall", 42) + pad(std::to_string(r.overall->count), 5) + pad(fixed2(r.overall->mean_cvg), 7) +
             fixed2(r.overall->mean_iou) + "\n";
    }
    out += "\n";
  }
  if (proposed != nullptr && baseline != nullptr) {
    auto overall = [](const EvalReport& r, bool c) {
      return r.overall ? fixed2(c ? r.overall->mean_cvg : r.overall->mean_iou) : std::string("-");
    };
    out += "Representation comparison\n";
    out += pad("Representation Type", 22) + pad("CVG", 7) + "IOU\n";
    out += pad("Original", 22) + pad(overall(*baseline, true), 7) + overall(*baseline, false) + "\n";
    out += pad("Proposed", 22) + pad(overall(*proposed, true), 7) + overall(*proposed, false) + "\n\n";

    out += "Allergen based queries\n";
    out += pad("Query", 20) + pad("Representation", 16) + pad("CVG", 7) + "IOU\n";
    for (const auto& [label, kind] : {std::pair{"Explicit allergen", QueryKind::kAllergenExcludeExplicit},
                                      std::pair{"Implicit allergen", QueryKind::kIngredientExclude}}) {
      out += pad(label, 20) + pad("Original", 16) + pad(cell(*baseline, kind, true), 7) + cell(*baseline, kind, false) + "\n";
      out += pad("", 20) + pad("Proposed", 16) + pad(cell(*proposed, kind, true), 7) + cell(*proposed, kind, false) + "\n";
    }
  }
  return out;
}

}  // namespace r3::eval
