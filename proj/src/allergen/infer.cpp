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

#include "r3/allergen/infer.hpp"

#include <algorithm>

#include "r3/common/error.hpp"

namespace r3::allergen {

InferResult infer(std::string_view ingredient, const AllergenLexicon& lexicon, const EmbeddingTable& embeddings,
                  double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "infer threshold must lie in [0,1]");
  }
  InferResult result;
  const auto query = embeddings.phrase_vector(ingredient);
  if (!query) {
    result.out_of_vocabulary = true;
    return result;
  }
  for (const auto& cls : lexicon.classes()) {
    std::optional<double> best;
    for (const auto& member : cls.members) {
      const auto mv = embeddings.phrase_vector(member);
      if (!mv) continue;
      const double s = cosine(*query, *mv);
      if (!best || s > *best) best = s;
    }
    if (best && *best >= threshold) {
      result.matches.push_back(Inference{make_info(cls, std::string(kInferredSource)), *best});
    }
  }
  std::stable_sort(result.matches.begin(), result.matches.end(), [](const Inference& a, const Inference& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.info.allergen_id < b.info.allergen_id;
  });
  return result;
}

std::vector<AllergenInfo> tag_ingredient(std::string_view ingredient, const AllergenLexicon& lexicon,
                                         const EmbeddingTable* embeddings, double threshold) {
  auto exact = lexicon.lookup(ingredient);
  if (!exact.empty() || embeddings == nullptr) return exact;
  std::vector<AllergenInfo> out;
  for (auto& m : infer(ingredient, lexicon, *embeddings, threshold).matches) out.push_back(std::move(m.info));
  std::sort(out.begin(), out.end(),
            [](const AllergenInfo& a, const AllergenInfo& b) { return a.allergen_id < b.allergen_id; });
  return out;
}

}  // namespace r3::allergen
