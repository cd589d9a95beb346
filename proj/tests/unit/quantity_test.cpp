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

#include "r3/common/error.hpp"
#include "r3/core/quantity.hpp"

namespace {

using r3::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_THROW(Rational(1, 0), r3::Error);
}

TEST(Rational, ParsesAllSurfaceForms) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("1/2"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("1 1/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_EQ(Rational::parse(" 2  1/4 "), Rational(9, 4));
}

TEST(Rational, RejectsMalformed) {
  for (const char* s : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1 2", "1 -1/2", "1e3", "9999999999999999"}) {
    EXPECT_FALSE(Rational::parse(s).has_value()) << s;
  }
}

TEST(Rational, Formatting) {
  EXPECT_EQ(Rational(3, 2).to_string(), "3/2");
  EXPECT_EQ(Rational(3, 2).to_mixed_string(), "1 1/2");
  EXPECT_EQ(Rational(1, 3).to_mixed_string(), "1/3");
  EXPECT_EQ(Rational(4).to_mixed_string(), "4");
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
}

TEST(Rational, StringRoundTrip) {
  for (std::int64_t n = -20; n <= 20; ++n) {
    for (std::int64_t d = 1; d <= 12; ++d) {
      const Rational r(n, d);
      EXPECT_EQ(Rational::parse(r.to_string()), r);
      EXPECT_EQ(Rational::parse(r.to_mixed_string()), r);
    }
  }
}

TEST(Units, AliasesResolveToCanonical) {
  EXPECT_EQ(r3::resolve_unit_alias("Tablespoons"), "tbsp");
  EXPECT_EQ(r3::resolve_unit_alias("tsp."), "tsp");
  EXPECT_EQ(r3::resolve_unit_alias("grams"), "g");
  EXPECT_FALSE(r3::resolve_unit_alias("handful").has_value());
  for (const auto& u : r3::canonical_units()) {
    EXPECT_TRUE(r3::is_canonical_unit(u));
    EXPECT_EQ(r3::resolve_unit_alias(u), u);
  }
  EXPECT_FALSE(r3::is_canonical_unit("cups"));
}

}  // namespace
