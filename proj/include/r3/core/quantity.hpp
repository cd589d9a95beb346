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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace r3 {

/// Exact non-negative-or-negative fraction kept in lowest terms with a
/// positive denominator. Measures are rationals so that "1/3 cup" survives
/// a save/load cycle exactly.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_negative() const { return num_ < 0; }

  // Accepts "2", "1/2", "0.25", "1 1/2". Returns nullopt on anything else.
  static std::optional<Rational> parse(std::string_view text);
  // "2", "1/2", "3/2". Inverse of parse.
  std::string to_string() const;
  // "2", "1/2", "1 1/2" (mixed form used in recipe text).
  std::string to_mixed_string() const;

  Rational operator+(const Rational& other) const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline constexpr std::string_view kUnitless = "unitless";

/// Canonical unit table: g, kg, ml, l, tsp, tbsp, cup, piece, slice, pinch
/// and the unitless sentinel.
const std::vector<std::string>& canonical_units();
bool is_canonical_unit(std::string_view unit);
// Maps an alias ("tablespoons", "Tbsp", "grams") to its canonical unit.
std::optional<std::string> resolve_unit_alias(std::string_view token);

struct Quantity {
  Rational measure;
  std::string unit{kUnitless};

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

}  // namespace r3
