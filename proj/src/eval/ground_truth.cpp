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

#include "r3/eval/ground_truth.hpp"

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"

namespace r3::eval {

GroundTruth GroundTruth::from_json(const nlohmann::json& doc) {
  const auto it = doc.find("queries");
  if (!doc.is_object() || it == doc.end() || !it->is_object()) {
    throw Error(ErrorCode::kParse, "ground truth: expected {\"queries\": {...}}");
  }
  GroundTruth truth;
  for (const auto& [id, ids] : it->items()) {
    if (!ids.is_array()) throw Error(ErrorCode::kParse, "ground truth: entry must be a list", id);
    IdSet set;
    for (const auto& rid : ids) {
      if (!rid.is_string()) throw Error(ErrorCode::kParse, "ground truth: recipe ids must be strings", id);
      set.insert(rid.get<std::string>());
    }
    truth.entries_.emplace(id, std::move(set));
  }
  return truth;
}

GroundTruth GroundTruth::load(const std::filesystem::path& path) {
  try {
    return from_json(nlohmann::json::parse(text::read_file(path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("ground truth: malformed JSON: ") + e.what(), path.string());
  }
}

const IdSet& GroundTruth::at(std::string_view query_id) const {
  const auto it = entries_.find(query_id);
  if (it == entries_.end()) {
    throw Error(ErrorCode::kMissingTruth, "no ground truth for query '" + std::string(query_id) + "'",
                std::string(query_id));
  }
  return it->second;
}

void GroundTruth::check_against(const Corpus& corpus) const {
  std::string missing;
  for (const auto& [qid, ids] : entries_) {
    for (const auto& id : ids) {
      if (corpus.find(id) == nullptr) missing += (missing.empty() ? "" : ", ") + qid + " -> " + id;
    }
  }
  if (!missing.empty()) throw Error(ErrorCode::kValidation, "ground truth names unknown recipes", missing);
}

}  // namespace r3::eval
