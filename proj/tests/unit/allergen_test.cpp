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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "r3/allergen/embeddings.hpp"
#include "r3/allergen/infer.hpp"
#include "r3/allergen/lexicon.hpp"
#include "r3/common/error.hpp"
#include "r3/common/text.hpp"
#include "test_support.hpp"

namespace {

using namespace r3::allergen;
using nlohmann::json;
using r3::testing::corpus_dir;

const AllergenLexicon& lexicon() {
  static const auto lex = AllergenLexicon::load(corpus_dir() / "lexicon" / "allergens.json");
  return lex;
}

const EmbeddingTable& embeddings() {
  static const auto table = EmbeddingTable::load(corpus_dir() / "lexicon" / "embeddings.txt");
  return table;
}

std::vector<std::string> categories(const std::vector<r3::AllergenInfo>& infos) {
  std::vector<std::string> out;
  for (const auto& i : infos) out.push_back(i.category);
  return out;
}

TEST(Lexicon, HasSeventeenNormalizedClasses) {
  const auto& classes = lexicon().classes();
  ASSERT_EQ(classes.size(), kClassCount);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    EXPECT_EQ(classes[i].allergen_id, static_cast<int>(i));
    EXPECT_EQ(classes[i].category, r3::text::normalize_key(classes[i].category));
    EXPECT_TRUE(std::is_sorted(classes[i].members.begin(), classes[i].members.end()));
  }
  EXPECT_NE(lexicon().find_category("Wheat/Gluten"), nullptr);
  EXPECT_EQ(lexicon().find_category("gluten"), nullptr);
}

TEST(Lexicon, ExactLookup) {
  EXPECT_EQ(categories(lexicon().lookup("Egg")), std::vector<std::string>{"egg"});
  EXPECT_TRUE(lexicon().lookup("water").empty());
  EXPECT_EQ(categories(lexicon().lookup("cornstarch")), std::vector<std::string>{"maize"});
  // Egg noodles sit in two classes.
  EXPECT_EQ(categories(lexicon().lookup("egg noodles")), (std::vector<std::string>{"egg", "wheat/gluten"}));
  const auto info = lexicon().lookup("egg").at(0);
  EXPECT_EQ(info.allergen_id, 0);
  EXPECT_EQ(info.source_ref, "iarn:allergen-groups");
  EXPECT_EQ(info.kg_ref, "kg:allergen/egg");
}

json valid_doc() { return json::parse(r3::text::read_file(corpus_dir() / "lexicon" / "allergens.json")); }

void expect_lexicon_parse_error(const json& doc) {
  try {
    AllergenLexicon::from_json(doc);
    ADD_FAILURE() << doc.dump().substr(0, 120);
  } catch (const r3::Error& e) {
    EXPECT_EQ(e.code(), r3::ErrorCode::kParse);
  }
}

TEST(Lexicon, RejectsMalformedDocuments) {
  expect_lexicon_parse_error(json::object());
  auto short_doc = valid_doc();
  short_doc.erase(short_doc.size() - 1);
  expect_lexicon_parse_error(short_doc);
  auto dup_id = valid_doc();
  dup_id[1]["allergen_id"] = 0;
  expect_lexicon_parse_error(dup_id);
  auto dup_cat = valid_doc();
  dup_cat[1]["category"] = "EGG";
  expect_lexicon_parse_error(dup_cat);
  auto empty_members = valid_doc();
  empty_members[2]["members"] = json::array();
  expect_lexicon_parse_error(empty_members);
  auto bad_type = valid_doc();
  bad_type[3]["members"] = "peanut";
  expect_lexicon_parse_error(bad_type);
}

TEST(Embeddings, ParseAndErrors) {
  std::istringstream good("2 3\nEgg 1 0 0\nyolk 0.5 0.5 0\n");
  const auto t = EmbeddingTable::parse(good);
  EXPECT_EQ(t.dimension(), 3u);
  EXPECT_EQ(t.size(), 2u);
  ASSERT_NE(t.find("egg"), nullptr);
  EXPECT_EQ(*t.phrase_vector("EGG yolk"), (std::vector<double>{0.75, 0.25, 0.0}));
  EXPECT_FALSE(t.phrase_vector("nothing known").has_value());

  for (const char* bad : {"egg 1 2\nyolk 1\n", "egg\n", "egg 1 x\n", "egg 1 nan\n", "egg 1 2abc\n"}) {
    std::istringstream in(bad);
    try {
      EmbeddingTable::parse(in);
      ADD_FAILURE() << bad;
    } catch (const r3::Error& e) {
      EXPECT_EQ(e.code(), r3::ErrorCode::kParse) << bad;
    }
  }
  EXPECT_THROW(EmbeddingTable::load("/nonexistent/embeddings.txt"), r3::Error);
}

TEST(Embeddings, CosineProperties) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> a(8), b(8);
    for (auto& x : a) x = n(rng);
    for (auto& x : b) x = n(rng);
    const double ab = cosine(a, b);
    EXPECT_DOUBLE_EQ(ab, cosine(b, a));
    EXPECT_GE(ab, -1.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_NEAR(cosine(a, a), 1.0, 1e-12);
    auto scaled = a;
    for (auto& x : scaled) x *= 3.5;
    EXPECT_NEAR(cosine(a, scaled), 1.0, 1e-12);
  }
  const std::vector<double> zero(8, 0.0), one(8, 1.0);
  EXPECT_EQ(cosine(zero, one), 0.0);
  const std::vector<double> short_v(3, 1.0);
  EXPECT_THROW(cosine(one, short_v), r3::Error);
}

TEST(Infer, YolkMapsToEgg) {
  for (const char* s : {"egg yolk", "egg yolks", "yolk", "egg whites"}) {
    const auto r = infer(s, lexicon(), embeddings());
    ASSERT_FALSE(r.matches.empty()) << s;
    EXPECT_EQ(r.matches[0].info.category, "egg") << s;
    EXPECT_EQ(r.matches[0].info.source_ref, kInferredSource);
    EXPECT_GE(r.matches[0].score, kDefaultInferThreshold);
  }
}

TEST(Infer, WaterInfersNothing) {
  const auto r = infer("water", lexicon(), embeddings());
  EXPECT_FALSE(r.out_of_vocabulary);
  EXPECT_TRUE(r.matches.empty());
}

TEST(Infer, OutOfVocabulary) {
  const auto r = infer("zzxqv", lexicon(), embeddings());
  EXPECT_TRUE(r.out_of_vocabulary);
  EXPECT_TRUE(r.matches.empty());
}

TEST(Infer, LexiconMemberScoresOne) {
  for (const auto& cls : lexicon().classes()) {
    for (const auto& m : cls.members) {
      if (!embeddings().phrase_vector(m)) continue;
      const auto r = infer(m, lexicon(), embeddings(), 0.0);
      const auto it = std::find_if(r.matches.begin(), r.matches.end(),
                                   [&](const Inference& x) { return x.info.allergen_id == cls.allergen_id; });
      ASSERT_NE(it, r.matches.end()) << m;
      EXPECT_NEAR(it->score, 1.0, 1e-12) << m;
    }
  }
}

TEST(Infer, ThresholdIsMonotone) {
  for (const char* s : {"egg yolk", "goat cheese", "rice noodles", "corn flour", "smoked salmon", "walnut oil"}) {
    std::size_t prev = lexicon().classes().size() + 1;
    for (double t = 0.0; t <= 1.0001; t += 0.05) {
      const auto r = infer(s, lexicon(), embeddings(), std::min(t, 1.0));
      EXPECT_LE(r.matches.size(), prev) << s << " at " << t;
      prev = r.matches.size();
      for (std::size_t i = 1; i < r.matches.size(); ++i) EXPECT_GE(r.matches[i - 1].score, r.matches[i].score);
    }
  }
  EXPECT_THROW(infer("egg", lexicon(), embeddings(), 1.5), r3::Error);
  EXPECT_THROW(infer("egg", lexicon(), embeddings(), -0.1), r3::Error);
}

TEST(Infer, StableUnderClassReordering) {
  auto classes = lexicon().classes();
  std::mt19937_64 rng(3);
  std::shuffle(classes.begin(), classes.end(), rng);
  const auto shuffled = AllergenLexicon::from_classes_unchecked(classes);
  for (const char* s : {"egg yolk", "goat cheese", "corn flour", "yolk"}) {
    const auto a = infer(s, lexicon(), embeddings(), 0.3);
    const auto b = infer(s, shuffled, embeddings(), 0.3);
    ASSERT_EQ(a.matches.size(), b.matches.size());
    for (std::size_t i = 0; i < a.matches.size(); ++i) {
      EXPECT_EQ(a.matches[i].info, b.matches[i].info);
      EXPECT_EQ(a.matches[i].score, b.matches[i].score);
    }
  }
}

TEST(Infer, TagPrefersExactMatches) {
  EXPECT_EQ(categories(tag_ingredient("cheddar", lexicon(), &embeddings())), std::vector<std::string>{"milk"});
  EXPECT_EQ(tag_ingredient("cheddar", lexicon(), &embeddings())[0].source_ref, "iarn:allergen-groups");
  const auto yolk = tag_ingredient("egg yolk", lexicon(), &embeddings());
  ASSERT_EQ(yolk.size(), 1u);
  EXPECT_EQ(yolk[0].source_ref, kInferredSource);
  EXPECT_TRUE(tag_ingredient("egg yolk", lexicon(), nullptr).empty());
}

}  // namespace
