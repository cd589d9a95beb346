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
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace r3::allergen {

/// Precomputed word vectors, one token per line: `token v1 v2 ... vd`.
/// A leading word2vec-style "<count> <dim>" header line is skipped.
class EmbeddingTable {
 public:
  static EmbeddingTable parse(std::istream& in, std::string_view source = "<stream>");
  static EmbeddingTable load(const std::filesystem::path& path);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<double>* find(std::string_view token) const;

  /// Mean of the in-vocabulary token vectors of a (possibly multi-word)
  /// name; nullopt when no token is in the vocabulary.
  std::optional<std::vector<double>> phrase_vector(std::string_view phrase) const;

 private:
  std::size_t dimension_ = 0;
  std::map<std::string, std::vector<double>, std::less<>> vectors_;
};

/// Cosine similarity; 0 when either vector has zero norm.
double cosine(std::span<const double> a, std::span<const double> b);

}  // namespace r3::allergen
