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

#include "r3/core/corpus.hpp"

#include <algorithm>
#include <fstream>

#include "r3/common/text.hpp"
#include "r3/core/json_io.hpp"
#include "r3/core/validate.hpp"

namespace r3 {

namespace fs = std::filesystem;

namespace {

std::string summarize(const std::vector<CorpusIssue>& issues) {
  std::string msg = "corpus failed to load with " + std::to_string(issues.size()) + " issue(s)";
  for (const auto& i : issues) {
    msg += "\n  " + i.file + (i.path.empty() ? "" : " [" + i.path + "]") + ": " + i.code + ": " + i.message;
  }
  return msg;
}

const std::vector<std::string>& empty_ids() {
  static const std::vector<std::string> kEmpty;
  return kEmpty;
}

void check_issues(std::vector<CorpusIssue>& issues, std::vector<Recipe>& recipes, const Lexicons& lexicons,
                  const std::vector<std::string>& sources, const std::optional<fs::path>& root) {
  std::map<std::string, std::string> seen;
  for (std::size_t i = 0; i < recipes.size(); ++i) {
    const auto& r = recipes[i];
    if (!r.id.empty()) {
      const auto [it, inserted] = seen.emplace(r.id, sources[i]);
      if (!inserted) {
        issues.push_back({sources[i], "id", std::string(to_string(ErrorCode::kDuplicateId)),
                          "duplicate recipe id '" + r.id + "' (also in " + it->second + ")"});
      }
    }
    ValidationContext ctx;
    ctx.lexicon = lexicons.allergens ? &*lexicons.allergens : nullptr;
    ctx.media_root = root;
    for (const auto& v : validate_recipe(r, ctx)) {
      issues.push_back({sources[i], v.path, std::string(to_string(v.code)), v.message});
    }
  }
}

}  // namespace

Lexicons Lexicons::load(const fs::path& dir) {
  Lexicons lex;
  std::error_code ec;
  if (fs::is_regular_file(dir / "allergens.json", ec)) lex.allergens = allergen::AllergenLexicon::load(dir / "allergens.json");
  if (fs::is_regular_file(dir / "embeddings.txt", ec)) lex.embeddings = allergen::EmbeddingTable::load(dir / "embeddings.txt");
  if (fs::is_regular_file(dir / "verbs.txt", ec)) lex.verbs = load_verb_lexicon(dir / "verbs.txt");
  return lex;
}

std::set<std::string> load_verb_lexicon(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read verb lexicon", path.string());
  std::set<std::string> verbs;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto verb = text::normalize_key(line);
    if (!verb.empty()) verbs.insert(std::move(verb));
  }
  return verbs;
}

CorpusError::CorpusError(std::vector<CorpusIssue> issues)
    : Error(ErrorCode::kValidation, summarize(issues), issues.empty() ? "" : issues.front().file),
      issues_(std::move(issues)) {}

Corpus Corpus::load(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw Error(ErrorCode::kIo, "corpus directory does not exist", root.string());

  std::vector<CorpusIssue> issues;
  Lexicons lexicons;
  try {
    lexicons = Lexicons::load(root / "lexicon");
  } catch (const Error& e) {
    issues.push_back({e.detail(), "", std::string(to_string(e.code())), e.what()});
  }

  std::vector<fs::path> files;
  if (fs::is_directory(root / "recipes", ec)) {
    for (const auto& entry : fs::directory_iterator(root / "recipes")) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<Recipe> recipes;
  std::vector<std::string> sources;
  for (const auto& file : files) {
    const std::string rel = fs::relative(file, root, ec).generic_string();
    try {
      recipes.push_back(parse_recipe(text::read_file(file)));
      sources.push_back(rel);
    } catch (const Error& e) {
      issues.push_back({rel, e.detail(), std::string(to_string(e.code())), e.what()});
    }
  }
  check_issues(issues, recipes, lexicons, sources, root);
  if (!issues.empty()) throw CorpusError(std::move(issues));

  Corpus corpus;
  corpus.recipes_ = std::move(recipes);
  corpus.lexicons_ = std::move(lexicons);
  corpus.root_ = root;
  corpus.build_indexes();
  corpus.load_media();
  return corpus;
}

Corpus Corpus::from_recipes(std::vector<Recipe> recipes, Lexicons lexicons, std::optional<fs::path> root) {
  std::vector<CorpusIssue> issues;
  std::vector<std::string> sources;
  for (const auto& r : recipes) sources.push_back("<memory:" + r.id + ">");
  check_issues(issues, recipes, lexicons, sources, root);
  if (!issues.empty()) throw CorpusError(std::move(issues));
  Corpus corpus;
  corpus.recipes_ = std::move(recipes);
  corpus.lexicons_ = std::move(lexicons);
  corpus.root_ = std::move(root);
  corpus.build_indexes();
  corpus.load_media();
  return corpus;
}

void Corpus::build_indexes() {
  std::sort(recipes_.begin(), recipes_.end(), [](const Recipe& a, const Recipe& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < recipes_.size(); ++i) {
    const auto& r = recipes_[i];
    by_id_.emplace(r.id, i);
    std::set<std::string> categories;
    for (const auto& ing : r.ingredients) {
      by_ingredient_[ing.name].push_back(r.id);
      for (const auto& a : ing.allergens) categories.insert(a.category);
    }
    for (const auto& c : categories) by_allergen_[c].push_back(r.id);
    by_task_count_[r.task_count()].push_back(r.id);
  }
  for (auto& [name, ids] : by_ingredient_) ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

void Corpus::load_media() {
  if (!root_) return;
  std::set<std::string> refs;
  for (const auto& r : recipes_) {
    for (const auto& ing : r.ingredients) {
      if (ing.image_ref) refs.insert(*ing.image_ref);
    }
    for (const auto& ins : r.instructions) refs.insert(ins.modality.begin(), ins.modality.end());
  }
  for (const auto& ref : refs) {
    try {
      media_.emplace(ref, std::make_shared<const media::Image>(media::load_image(*root_ / ref)));
    } catch (const Error& e) {
      warnings_.push_back("media '" + ref + "' unavailable: " + e.what());
    }
  }
}

const Recipe* Corpus::find(std::string_view id) const {
  const auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &recipes_[it->second];
}

const std::vector<std::string>& Corpus::ids_with_ingredient(std::string_view name) const {
  const auto it = by_ingredient_.find(text::normalize_key(name));
  return it == by_ingredient_.end() ? empty_ids() : it->second;
}

const std::vector<std::string>& Corpus::ids_with_allergen(std::string_view category) const {
  const auto it = by_allergen_.find(text::normalize_key(category));
  return it == by_allergen_.end() ? empty_ids() : it->second;
}

const std::vector<std::string>& Corpus::ids_with_task_count(std::size_t n) const {
  const auto it = by_task_count_.find(n);
  return it == by_task_count_.end() ? empty_ids() : it->second;
}

const media::Image* Corpus::image(std::string_view ref) const {
  const auto it = media_.find(ref);
  return it == media_.end() ? nullptr : it->second.get();
}

std::shared_ptr<const media::Image> Corpus::image_handle(std::string_view ref) const {
  const auto it = media_.find(ref);
  return it == media_.end() ? nullptr : it->second;
}

}  // namespace r3
