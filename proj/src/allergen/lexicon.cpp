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

#include "r3/allergen/lexicon.hpp"

#include <algorithm>
#include <set>

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"

namespace r3::allergen {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& where) {
  throw Error(ErrorCode::kParse, "allergen lexicon: " + what, where);
}

void normalize(std::vector<AllergenClass>& classes) {
  for (auto& cls : classes) {
    cls.category = text::normalize_key(cls.category);
    for (auto& m : cls.members) m = text::normalize_key(m);
    std::sort(cls.members.begin(), cls.members.end());
    cls.members.erase(std::unique(cls.members.begin(), cls.members.end()), cls.members.end());
  }
  std::sort(classes.begin(), classes.end(),
            [](const AllergenClass& a, const AllergenClass& b) { return a.allergen_id < b.allergen_id; });
}

}  // namespace

AllergenLexicon AllergenLexicon::from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) fail("expected an array of classes", "<root>");
  std::vector<AllergenClass> classes;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& j = doc[i];
    const std::string path = "[" + std::to_string(i) + "]";
    if (!j.is_object()) fail("expected object", path);
    AllergenClass cls;
    try {
      cls.allergen_id = j.at("allergen_id").get<int>();
      cls.category = j.at("category").get<std::string>();
      cls.members = j.at("members").get<std::vector<std::string>>();
      cls.source_ref = j.value("source_ref", std::string{});
    } catch (const nlohmann::json::exception& e) {
      fail(e.what(), path);
    }
    classes.push_back(std::move(cls));
  }
  normalize(classes);

  if (classes.size() != kClassCount) {
    fail("expected " + std::to_string(kClassCount) + " classes, found " + std::to_string(classes.size()), "<root>");
  }
  std::set<std::string> categories;
  std::set<int> ids;
  for (const auto& cls : classes) {
    if (cls.allergen_id < 0) fail("negative allergen_id", cls.category);
    if (!ids.insert(cls.allergen_id).second) fail("duplicate allergen_id", std::to_string(cls.allergen_id));
    if (cls.category.empty()) fail("empty category", std::to_string(cls.allergen_id));
    if (!categories.insert(cls.category).second) fail("duplicate category", cls.category);
    if (cls.members.empty()) fail("empty member set", cls.category);
  }
  AllergenLexicon lexicon;
  lexicon.classes_ = std::move(classes);
  return lexicon;
}

AllergenLexicon AllergenLexicon::load(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text::read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("allergen lexicon: malformed JSON: ") + e.what(), path.string());
  }
  return from_json(doc);
}

AllergenLexicon AllergenLexicon::from_classes_unchecked(std::vector<AllergenClass> classes) {
  normalize(classes);
  AllergenLexicon lexicon;
  lexicon.classes_ = std::move(classes);
  return lexicon;
}

const AllergenClass* AllergenLexicon::find_category(std::string_view category) const {
  const std::string key = text::normalize_key(category);
  for (const auto& cls : classes_) {
    if (cls.category == key) return &cls;
  }
  return nullptr;
}

std::vector<AllergenInfo> AllergenLexicon::lookup(std::string_view ingredient) const {
  const std::string key = text::normalize_key(ingredient);
  std::vector<AllergenInfo> out;
  for (const auto& cls : classes_) {
    if (std::binary_search(cls.members.begin(), cls.members.end(), key)) out.push_back(make_info(cls, cls.source_ref));
  }
  return out;
}

AllergenInfo make_info(const AllergenClass& cls, std::string source_ref) {
  return AllergenInfo{cls.allergen_id, cls.category, std::move(source_ref), "kg:allergen/" + text::slugify(cls.category)};
}

}  // namespace r3::allergen
