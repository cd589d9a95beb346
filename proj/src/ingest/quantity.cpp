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

#include "r3/ingest/quantity.hpp"

#include <array>
#include <sstream>
#include <utility>
#include <vector>

#include "r3/common/text.hpp"

namespace r3::ingest {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 15> kVulgarFractions = {{
    {"½", "1/2"}, {"⅓", "1/3"}, {"⅔", "2/3"}, {"¼", "1/4"}, {"¾", "3/4"},
    {"⅕", "1/5"}, {"⅖", "2/5"}, {"⅗", "3/5"}, {"⅘", "4/5"}, {"⅙", "1/6"},
    {"⅚", "5/6"}, {"⅛", "1/8"}, {"⅜", "3/8"}, {"⅝", "5/8"}, {"⅞", "7/8"},
}};

std::string expand_vulgar_fractions(std::string_view line) {
  std::string out;
  out.reserve(line.size() + 8);
  std::size_t i = 0;
  while (i < line.size()) {
    bool replaced = false;
    for (const auto& [glyph, ascii] : kVulgarFractions) {
      if (line.substr(i, glyph.size()) == glyph) {
        out += " ";
        out += ascii;
        out += " ";
        i += glyph.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(line[i++]);
  }
  return out;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> words;
  std::istringstream in(s);
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

bool is_plain_fraction(const std::string& w) {
  const auto r = Rational::parse(w);
  return r && w.find('/') != std::string::npos && w.find('.') == std::string::npos;
}

}  // namespace

ParsedIngredientLine parse_quantity(std::string_view line) {
  ParsedIngredientLine out;
  const std::string expanded = text::normalize_space(expand_vulgar_fractions(line));
  const auto words = split_words(expanded);

  std::size_t pos = 0;
  std::optional<Rational> measure;
  if (!words.empty()) {
    measure = Rational::parse(words[0]);
    if (measure && measure->is_negative()) measure.reset();
    if (measure) {
      pos = 1;
      const bool whole = words[0].find_first_not_of("0123456789") == std::string::npos;
      if (whole && words.size() > 1 && is_plain_fraction(words[1])) {
        measure = *measure + *Rational::parse(words[1]);
        pos = 2;
      }
    }
  }

  if (!measure) {
    out.resolved = false;
    out.name = text::normalize_key(line);
    return out;
  }
  out.quantity.measure = *measure;
  if (pos < words.size()) {
    if (const auto unit = resolve_unit_alias(words[pos]); unit && pos + 1 < words.size()) {
      out.quantity.unit = *unit;
      ++pos;
      if (pos + 1 < words.size() && text::casefold(words[pos]) == "of") ++pos;
    }
  }
  std::string rest;
  for (std::size_t i = pos; i < words.size(); ++i) {
    if (!rest.empty()) rest.push_back(' ');
    rest += words[i];
  }
  const auto comma = rest.find(',');
  out.name = text::normalize_key(rest.substr(0, comma));
  if (comma != std::string::npos) {
    auto quality = text::normalize_key(rest.substr(comma + 1));
    if (!quality.empty()) out.quality = std::move(quality);
  }
  if (out.name.empty()) {
    out.resolved = false;
    out.name = text::normalize_key(line);
  }
  return out;
}

std::string format_quantity_line(const Quantity& quantity, std::string_view name) {
  std::string out = quantity.measure.to_mixed_string();
  if (quantity.unit != kUnitless) out += " " + quantity.unit;
  out += " ";
  out += name;
  return out;
}

}  // namespace r3::ingest
