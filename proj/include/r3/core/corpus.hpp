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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "r3/allergen/embeddings.hpp"
#include "r3/allergen/lexicon.hpp"
#include "r3/common/error.hpp"
#include "r3/core/recipe.hpp"
#include "r3/media/image.hpp"

namespace r3 {

/// Lexical resources that live under `<corpus>/lexicon/`. Each file is
/// optional; a missing file leaves the member empty.
struct Lexicons {
  std::optional<allergen::AllergenLexicon> allergens;     // allergens.json
  std::optional<allergen::EmbeddingTable> embeddings;     // embeddings.txt
  std::set<std::string> verbs;                            // verbs.txt

  static Lexicons load(const std::filesystem::path& dir);
};

std::set<std::string> load_verb_lexicon(const std::filesystem::path& path);

struct CorpusIssue {
  std::string file;
  std::string path;  // field path inside the document, when known
  std::string code;
  std::string message;
};

/// Aggregated load failure: every problem in every file.
class CorpusError : public Error {
 public:
  explicit CorpusError(std::vector<CorpusIssue> issues);
  const std::vector<CorpusIssue>& issues() const { return issues_; }

 private:
  std::vector<CorpusIssue> issues_;
};

/// Immutable, validated recipe collection with lookup indexes. Recipes are
/// held sorted by id, so two loads of the same directory compare equal
/// whatever order the filesystem lists files in.
class Corpus {
 public:
  // Layout: recipes/*.json, media/**, lexicon/{allergens.json,embeddings.txt,verbs.txt}.
  static Corpus load(const std::filesystem::path& root);
  static Corpus from_recipes(std::vector<Recipe> recipes, Lexicons lexicons = {},
                             std::optional<std::filesystem::path> root = std::nullopt);

  std::size_t size() const { return recipes_.size(); }
  bool empty() const { return recipes_.empty(); }
  const std::vector<Recipe>& recipes() const { return recipes_; }
  const Recipe* find(std::string_view id) const;

  const std::vector<std::string>& ids_with_ingredient(std::string_view name) const;
  const std::vector<std::string>& ids_with_allergen(std::string_view category) const;
  const std::vector<std::string>& ids_with_task_count(std::size_t n) const;
  const std::map<std::string, std::vector<std::string>, std::less<>>& ingredient_index() const {
    return by_ingredient_;
  }
  const std::map<std::string, std::vector<std::string>, std::less<>>& allergen_index() const { return by_allergen_; }

  const Lexicons& lexicons() const { return lexicons_; }
  const std::optional<std::filesystem::path>& root() const { return root_; }

  // Decoded media asset by corpus-relative path; nullptr when it was
  // missing or undecodable at load time.
  const media::Image* image(std::string_view ref) const;
  std::shared_ptr<const media::Image> image_handle(std::string_view ref) const;
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  void build_indexes();
  void load_media();

  std::vector<Recipe> recipes_;
  Lexicons lexicons_;
  std::optional<std::filesystem::path> root_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
  std::map<std::string, std::vector<std::string>, std::less<>> by_ingredient_;
  std::map<std::string, std::vector<std::string>, std::less<>> by_allergen_;
  std::map<std::size_t, std::vector<std::string>> by_task_count_;
  std::map<std::string, std::shared_ptr<const media::Image>, std::less<>> media_;
  std::vector<std::string> warnings_;
};

}  // namespace r3
