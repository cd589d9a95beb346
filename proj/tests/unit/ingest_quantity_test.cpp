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

#include "r3/ingest/quantity.hpp"

namespace {

using r3::Rational;
using r3::ingest::format_quantity_line;
using r3::ingest::parse_quantity;

struct Row {
  const char* line;
  Rational measure;
  const char* unit;
  const char* name;
  const char* quality;  // nullptr when absent
  bool resolved;
};

// Expected values worked out by hand from the line grammar.
const Row kTable[] = {
    {"1 egg", {1}, "unitless", "egg", nullptr, true},
    {"2 cups flour", {2}, "cup", "flour", nullptr, true},
    {"1 1/2 tsp salt", {3, 2}, "tsp", "salt", nullptr, true},
    {"½ cup milk", {1, 2}, "cup", "milk", nullptr, true},
    {"1½ cups sugar", {3, 2}, "cup", "sugar", nullptr, true},
    {"3 egg whites", {3}, "unitless", "egg whites", nullptr, true},
    {"150 g caster sugar", {150}, "g", "caster sugar", nullptr, true},
    {"1 pinch of salt", {1}, "pinch", "salt", nullptr, true},
    {"2 tbsp. olive oil", {2}, "tbsp", "olive oil", nullptr, true},
    {"0.5 kg potatoes, peeled", {1, 2}, "kg", "potatoes", "peeled", true},
    {"salt to taste", {0}, "unitless", "salt to taste", nullptr, false},
    {"4 Large Eggs", {4}, "unitless", "large eggs", nullptr, true},
    {"1 cup", {1}, "unitless", "cup", nullptr, true},
    {"-2 eggs", {0}, "unitless", "-2 eggs", nullptr, false},
    {"3/4 cup heavy cream, whipped", {3, 4}, "cup", "heavy cream", "whipped", true},
    {"10 slices bacon", {10}, "slice", "bacon", nullptr, true},
    {"1 l water", {1}, "l", "water", nullptr, true},
    {"250 ml whole milk", {250}, "ml", "whole milk", nullptr, true},
    {"2 pieces chicken", {2}, "piece", "chicken", nullptr, true},
    {"1 1/2", {0}, "unitless", "1 1/2", nullptr, false},
    {"2 teaspoons Baking Powder", {2}, "tsp", "baking powder", nullptr, true},
    {"1 c sugar", {1}, "cup", "sugar", nullptr, true},
    {"a pinch of salt", {0}, "unitless", "a pinch of salt", nullptr, false},
    {"2 eggs,", {2}, "unitless", "eggs", nullptr, true},
    {"5 kgs flour", {5}, "kg", "flour", nullptr, true},
    {"2.25 cups rice", {9, 4}, "cup", "rice", nullptr, true},
    {"12 cherry tomatoes, halved, seeded", {12}, "unitless", "cherry tomatoes", "halved, seeded", true},
    {"  2   Tbsp   soy sauce ", {2}, "tbsp", "soy sauce", nullptr, true},
    {"8 oz cheese", {8}, "unitless", "oz cheese", nullptr, true},
    {"1e3 grams sugar", {0}, "unitless", "1e3 grams sugar", nullptr, false},
};

TEST(IngestQuantity, OracleTable) {
  for (const auto& row : kTable) {
    const auto p = parse_quantity(row.line);
    EXPECT_EQ(p.resolved, row.resolved) << row.line;
    EXPECT_EQ(p.name, row.name) << row.line;
    if (row.resolved) {
      EXPECT_EQ(p.quantity.measure, row.measure) << row.line;
      EXPECT_EQ(p.quantity.unit, row.unit) << row.line;
    }
    if (row.quality == nullptr) {
      EXPECT_FALSE(p.quality.has_value()) << row.line;
    } else {
      EXPECT_EQ(p.quality, row.quality) << row.line;
    }
  }
}

TEST(IngestQuantity, EmptyLineIsUnresolved) {
  const auto p = parse_quantity("");
  EXPECT_FALSE(p.resolved);
  EXPECT_EQ(p.name, "");
}

TEST(IngestQuantity, FormatOmitsUnitless) {
  EXPECT_EQ(format_quantity_line({Rational(3, 2), "cup"}, "flour"), "1 1/2 cup flour");
  EXPECT_EQ(format_quantity_line({Rational(2), "unitless"}, "eggs"), "2 eggs");
}

TEST(IngestQuantity, CanonicalRoundTrip) {
  const char* names[] = {"flour", "egg whites", "whole milk", "caster sugar", "soy sauce", "bacon"};
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(0, 60), den(1, 12), unit(0, 10), name(0, 5);
  for (int i = 0; i < 2000; ++i) {
    const r3::Quantity q{Rational(num(rng), den(rng)), r3::canonical_units()[static_cast<std::size_t>(unit(rng))]};
    const std::string n = names[name(rng)];
    const auto line = format_quantity_line(q, n);
    const auto p = parse_quantity(line);
    ASSERT_TRUE(p.resolved) << line;
    EXPECT_EQ(p.quantity, q) << line;
    EXPECT_EQ(p.name, n) << line;
  }
}

}  // namespace
