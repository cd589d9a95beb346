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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "r3/core/corpus.hpp"
#include "r3/eval/metrics.hpp"

namespace r3::eval {

/// Query id -> relevant recipe ids. File format:
///   {"queries": {"<query id>": ["<recipe id>", ...], ...}}
class GroundTruth {
 public:
  static GroundTruth from_json(const nlohmann::json& doc);
  static GroundTruth load(const std::filesystem::path& path);

  void set(std::string query_id, IdSet ids) { entries_[std::move(query_id)] = std::move(ids); }
  // Throws Error{kMissingTruth} naming the query id.
  const IdSet& at(std::string_view query_id) const;
  bool contains(std::string_view query_id) const { return entries_.find(query_id) != entries_.end(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, IdSet, std::less<>>& entries() const { return entries_; }

  // Throws Error{kValidation} listing recipe ids absent from the corpus.
  void check_against(const Corpus& corpus) const;

 private:
  std::map<std::string, IdSet, std::less<>> entries_;
};

}  // namespace r3::eval
