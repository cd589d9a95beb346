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

#include "r3/eval/baseline.hpp"

#include <algorithm>

#include "r3/common/text.hpp"
#include "r3/ingest/ingest.hpp"
#include "r3/ingest/quantity.hpp"

namespace r3::eval {

using query::QueryKind;

RawDocument make_raw_document(std::string id, std::string title, std::string body) {
  RawDocument doc{std::move(id), std::move(title), std::move(body), {}};
  for (auto& t : text::tokenize(doc.title)) doc.tokens.insert(std::move(t));
  for (auto& t : text::tokenize(doc.text)) doc.tokens.insert(std::move(t));
  return doc;
}

RawCorpus RawCorpus::from_corpus(const Corpus& corpus) {
  RawCorpus raw;
  for (const auto& r : corpus.recipes()) {
    std::filesystem::path file;
    if (corpus.root()) file = *corpus.root() / "raw" / (r.id + ".json");
    std::error_code ec;
    if (!file.empty() && std::filesystem::is_regular_file(file, ec)) {
      const auto source = ingest::RawRecipe::load(file);
      std::string body = text::join(source.ingredient_lines, "\n") + "\n" + text::join(source.instruction_paragraphs, "\n");
      raw.add(make_raw_document(r.id, source.title, std::move(body)));
      continue;
    }
    std::string body;
    for (const auto& ing : r.ingredients) body += ingest::format_quantity_line(ing.quantity, ing.name) + "\n";
    for (const auto& ins : r.instructions) body += ins.original_text + "\n";
    raw.add(make_raw_document(r.id, r.name, std::move(body)));
  }
  return raw;
}

void RawCorpus::add(RawDocument doc) {
  auto id = doc.id;
  docs_.insert_or_assign(std::move(id), std::move(doc));
}

bool baseline_handles(QueryKind kind) {
  return kind == QueryKind::kNameMatch || kind == QueryKind::kIngredientInclude ||
         kind == QueryKind::kIngredientExclude || kind == QueryKind::kCuisineMatch;
}

IdSet baseline_retrieve(const query::Query& q, const RawCorpus& raw) {
  IdSet out;
  if (!baseline_handles(q.kind) || !q.text_param) return out;
  const auto needle = text::tokenize(*q.text_param);
  if (needle.empty()) return out;
  for (const auto& [id, doc] : raw.documents()) {
    const bool contains =
        std::all_of(needle.begin(), needle.end(), [&doc](const std::string& t) { return doc.tokens.contains(t); });
    if (contains != (q.kind == QueryKind::kIngredientExclude)) out.insert(id);
  }
  return out;
}

std::string_view to_string(QueryFeature f) {
  switch (f) {
    case QueryFeature::kAllergen: return "Allergen Based";
    case QueryFeature::kIngredient: return "Ingredient Based";
    case QueryFeature::kText: return "Text data-modality";
    case QueryFeature::kImage: return "Image data-modality";
    case QueryFeature::kLength: return "Length Based";
    case QueryFeature::kName: return "Name Based";
  }
  return "?";
}

std::string_view to_string(Retriever r) { return r == Retriever::kProposed ? "proposed" : "baseline"; }

bool supports(Retriever retriever, QueryFeature feature) {
  if (retriever == Retriever::kProposed) return true;
  return feature == QueryFeature::kIngredient || feature == QueryFeature::kText || feature == QueryFeature::kName;
}

}  // namespace r3::eval
