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
#include <set>
#include <string>

#include "r3/core/corpus.hpp"
#include "r3/eval/metrics.hpp"
#include "r3/query/query.hpp"

namespace r3::eval {

/// A recipe in its original textual form: title plus ingredient lines and
/// step text, reduced to a token set.
struct RawDocument {
  std::string id;
  std::string title;
  std::string text;
  std::set<std::string> tokens;  // tokens of title + text
};

class RawCorpus {
 public:
  /// Reads `<root>/raw/<recipe id>.json` (raw recipe format) for every
  /// corpus recipe. Recipes without a raw file fall back to their own name,
  /// ingredient lines and instruction original_text.
  static RawCorpus from_corpus(const Corpus& corpus);
  void add(RawDocument doc);

  const std::map<std::string, RawDocument>& documents() const { return docs_; }

 private:
  std::map<std::string, RawDocument> docs_;
};

RawDocument make_raw_document(std::string id, std::string title, std::string text);

/// Retrieval over the original text. Name, ingredient and cuisine kinds use
/// case-folded token containment; explicit-allergen queries return nothing
/// because allergen categories never appear in recipe text; length, time
/// and image kinds are unsupported and return nothing.
IdSet baseline_retrieve(const query::Query& q, const RawCorpus& raw);
bool baseline_handles(query::QueryKind kind);

/// Rows of the query-support comparison between the textual representation
/// and the structured one.
enum class QueryFeature { kAllergen, kIngredient, kText, kImage, kLength, kName };
inline constexpr QueryFeature kAllQueryFeatures[] = {QueryFeature::kAllergen, QueryFeature::kIngredient,
                                                     QueryFeature::kText,     QueryFeature::kImage,
                                                     QueryFeature::kLength,   QueryFeature::kName};
std::string_view to_string(QueryFeature f);

enum class Retriever { kProposed, kBaseline };
std::string_view to_string(Retriever r);

bool supports(Retriever retriever, QueryFeature feature);

}  // namespace r3::eval
