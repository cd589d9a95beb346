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

#include <string_view>
#include <vector>

#include "r3/allergen/embeddings.hpp"
#include "r3/allergen/lexicon.hpp"

namespace r3::allergen {

inline constexpr double kDefaultInferThreshold = 0.6;

struct Inference {
  AllergenInfo info;  // source_ref is kInferredSource
  double score = 0.0;
};

struct InferResult {
  std::vector<Inference> matches;  // score descending, then allergen_id ascending
  bool out_of_vocabulary = false;
};

/// Embedding-similarity expansion for ingredients missing from the lexicon.
/// Each class is scored by its best-matching member (cosine of mean token
/// vectors); classes at or above the threshold are returned.
InferResult infer(std::string_view ingredient, const AllergenLexicon& lexicon, const EmbeddingTable& embeddings,
                  double threshold = kDefaultInferThreshold);

/// Exact lookup, falling back to inference when the ingredient is not a
/// lexicon member and embeddings are available.
std::vector<AllergenInfo> tag_ingredient(std::string_view ingredient, const AllergenLexicon& lexicon,
                                         const EmbeddingTable* embeddings,
                                         double threshold = kDefaultInferThreshold);

}  // namespace r3::allergen
