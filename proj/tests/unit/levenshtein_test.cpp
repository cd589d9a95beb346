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

#include <random>

#include "r3/common/text.hpp"
#include "r3/query/levenshtein.hpp"
#include "oracles.hpp"

namespace {

using r3::query::edit_distance;
using r3::query::levenshtein_similarity;

TEST(Levenshtein, WorkedExamples) {
  EXPECT_EQ(levenshtein_similarity("egg", "eggs"), 0.75);
  EXPECT_EQ(edit_distance(U"kitten", U"sitting"), 3u);
  EXPECT_DOUBLE_EQ(levenshtein_similarity("kitten", "sitting"), 1.0 - 3.0 / 7.0);
  EXPECT_EQ(levenshtein_similarity("", ""), 1.0);
  EXPECT_EQ(levenshtein_similarity("abc", ""), 0.0);
  EXPECT_EQ(levenshtein_similarity("Egg  Noodles", " egg noodles"), 1.0);
  // Code points, not bytes: one substitution in a three-letter word.
  EXPECT_DOUBLE_EQ(levenshtein_similarity("café", "cafe"), 0.75);
  EXPECT_DOUBLE_EQ(levenshtein_similarity("中文", "中"), 0.5);
}

TEST(Levenshtein, AgreesWithFullMatrixOracle) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto a = r3::testing::random_word(rng, 12);
    const auto b = r3::testing::random_word(rng, 12);
    ASSERT_EQ(edit_distance(a, b), r3::testing::dp_edit_distance(a, b));
    const auto sa = r3::testing::encode_utf8(a);
    const auto sb = r3::testing::encode_utf8(b);
    ASSERT_EQ(levenshtein_similarity(sa, sb), r3::testing::dp_similarity(a, b)) << sa << " / " << sb;
  }
}

TEST(Levenshtein, MetricProperties) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    const auto a = r3::testing::encode_utf8(r3::testing::random_word(rng, 10));
    const auto b = r3::testing::encode_utf8(r3::testing::random_word(rng, 10));
    const double ab = levenshtein_similarity(a, b);
    EXPECT_EQ(ab, levenshtein_similarity(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_EQ(levenshtein_similarity(a, a), 1.0);
    const bool same = r3::text::casefold(a) == r3::text::casefold(b);
    EXPECT_EQ(ab == 1.0, same) << a << " / " << b;
    const auto ua = r3::text::decode_utf8(a), ub = r3::text::decode_utf8(b);
    const auto uc = r3::testing::random_word(rng, 10);
    EXPECT_LE(edit_distance(ua, ub), edit_distance(ua, uc) + edit_distance(uc, ub));
  }
}

}  // namespace
