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

#include "r3/core/quantity.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"

namespace r3 {

namespace {

std::optional<std::int64_t> parse_digits(std::string_view s) {
  if (s.empty() || s.size() > 15) return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  const std::string s = text::normalize_space(text);
  std::string_view v = s;
  bool negative = false;
  if (!v.empty() && v.front() == '-') {
    negative = true;
    v.remove_prefix(1);
  }
  auto sign = [negative](Rational r) { return negative ? Rational(-r.num(), r.den()) : r; };

  if (const auto space = v.find(' '); space != std::string_view::npos) {
    const auto whole = v.substr(0, space);
    const auto frac = parse(v.substr(space + 1));
    const auto w = parse_digits(whole);
    if (!all_digits(whole) || !w || !frac || frac->num() < 0 || frac->den() == 1) return std::nullopt;
    return sign(Rational(*w) + *frac);
  }
  if (const auto slash = v.find('/'); slash != std::string_view::npos) {
    const auto n = v.substr(0, slash);
    const auto d = v.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) return std::nullopt;
    const auto nv = parse_digits(n);
    const auto dv = parse_digits(d);
    if (!nv || !dv || *dv == 0) return std::nullopt;
    return sign(Rational(*nv, *dv));
  }
  if (const auto dot = v.find('.'); dot != std::string_view::npos) {
    const auto ip = v.substr(0, dot);
    const auto fp = v.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp) || fp.size() > 9) return std::nullopt;
    const auto iv = ip.empty() ? std::optional<std::int64_t>(0) : parse_digits(ip);
    const auto fv = parse_digits(fp);
    if (!iv || !fv) return std::nullopt;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    return sign(Rational(*iv * scale + *fv, scale));
  }
  if (!all_digits(v)) return std::nullopt;
  const auto value = parse_digits(v);
  if (!value) return std::nullopt;
  return sign(Rational(*value));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_mixed_string() const {
  if (den_ == 1 || num_ < den_ || num_ < 0) return to_string();
  return std::to_string(num_ / den_) + " " + std::to_string(num_ % den_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

const std::vector<std::string>& canonical_units() {
  static const std::vector<std::string> units = {"g",     "kg",    "ml",    "l",     "tsp",     "tbsp",
                                                 "cup",   "piece", "slice", "pinch", "unitless"};
  return units;
}

bool is_canonical_unit(std::string_view unit) {
  const auto& units = canonical_units();
  return std::find(units.begin(), units.end(), unit) != units.end();
}

std::optional<std::string> resolve_unit_alias(std::string_view token) {
  static const std::map<std::string, std::string, std::less<>> aliases = {
      {"g", "g"},           {"gram", "g"},          {"grams", "g"},          {"gr", "g"},
      {"kg", "kg"},         {"kilogram", "kg"},     {"kilograms", "kg"},     {"kgs", "kg"},
      {"ml", "ml"},         {"milliliter", "ml"},   {"milliliters", "ml"},   {"millilitre", "ml"},
      {"millilitres", "ml"}, {"l", "l"},            {"liter", "l"},          {"liters", "l"},
      {"litre", "l"},       {"litres", "l"},        {"tsp", "tsp"},          {"tsps", "tsp"},
      {"teaspoon", "tsp"},  {"teaspoons", "tsp"},   {"tbsp", "tbsp"},        {"tbsps", "tbsp"},
      {"tbs", "tbsp"},      {"tablespoon", "tbsp"}, {"tablespoons", "tbsp"}, {"cup", "cup"},
      {"cups", "cup"},      {"c", "cup"},           {"piece", "piece"},      {"pieces", "piece"},
      {"pc", "piece"},      {"pcs", "piece"},       {"slice", "slice"},      {"slices", "slice"},
      {"pinch", "pinch"},   {"pinches", "pinch"},   {"unitless", "unitless"},
  };
  std::string key = text::casefold(token);
  while (!key.empty() && key.back() == '.') key.pop_back();
  if (const auto it = aliases.find(key); it != aliases.end()) return it->second;
  return std::nullopt;
}

}  // namespace r3
