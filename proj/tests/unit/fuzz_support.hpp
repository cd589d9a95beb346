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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "r3/core/recipe.hpp"
#include "r3/core/validate.hpp"
#include "r3/ingest/ingest.hpp"

namespace r3::testing {

// Produces random raw recipes whose strings are valid UTF-8 but otherwise
// arbitrary: recipe words, numbers, fractions, punctuation, control bytes,
// multi-byte code points and blank lines.
class RawRecipeFuzzer {
 public:
  explicit RawRecipeFuzzer(std::uint64_t seed) : rng_(seed) {}

  std::string utf8_string(std::size_t max_pieces) {
    static const std::vector<std::string> kPieces = {
        "egg", "Whisk", "the", "and", "then", "with", "2", "1/2", "½", "1 1/2", "cups", "tbsp.", "of", ",", ".",
        "!", ";", "...", "  ", "\t", "\n", "crème", "Ωmega", "😀", "中文", "zzxqv", "-3", "0.25", "g", "Stir",
        "bake", "baked", "and then", "noodles", "(", ")", "\"", "\\", "[", "]", "unknown", "unresolved"};
    std::string out;
    const auto n = pick(0, max_pieces);
    for (std::size_t i = 0; i < n; ++i) {
      switch (pick(0, 5)) {
        case 0: out += random_code_point(); break;
        case 1: out += " "; break;
        default: out += kPieces[pick(0, kPieces.size() - 1)]; break;
      }
    }
    return out;
  }

  ingest::RawRecipe raw_recipe() {
    ingest::RawRecipe raw;
    raw.title = utf8_string(6);
    for (auto n = pick(0, 6); n > 0; --n) raw.ingredient_lines.push_back(utf8_string(8));
    for (auto n = pick(1, 4); n > 0; --n) raw.instruction_paragraphs.push_back(utf8_string(24));
    for (auto n = pick(0, 3); n > 0; --n) {
      std::vector<std::string> paths;
      for (auto k = pick(0, 2); k > 0; --k) paths.push_back("media/" + utf8_string(2) + ".png");
      raw.image_paths.push_back(std::move(paths));
    }
    return raw;
  }

 private:
  std::size_t pick(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

  std::string random_code_point() {
    char32_t cp = 0;
    do {
      switch (pick(0, 3)) {
        case 0: cp = static_cast<char32_t>(pick(0x01, 0x7F)); break;
        case 1: cp = static_cast<char32_t>(pick(0x80, 0x7FF)); break;
        case 2: cp = static_cast<char32_t>(pick(0x800, 0xFFFF)); break;
        default: cp = static_cast<char32_t>(pick(0x10000, 0x10FFFF)); break;
      }
    } while (cp >= 0xD800 && cp <= 0xDFFF);
    std::string out;
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
  }

  std::mt19937_64 rng_;
};

// Returns an empty string when every placeholder and every validation problem
// in the draft is covered by an entry of the unresolved list, otherwise a
// description of the first gap.
inline std::string unflagged_problem(const ingest::IngestReport& report, const std::vector<Violation>& violations) {
  auto covered = [&](const std::string& path) {
    return std::any_of(report.unresolved.begin(), report.unresolved.end(),
                       [&](const ingest::Unresolved& u) { return path.rfind(u.field_path, 0) == 0; });
  };
  const auto& r = report.draft;
  for (std::size_t i = 0; i < r.instructions.size(); ++i) {
    const auto& ins = r.instructions[i];
    for (std::size_t k = 0; k < ins.tasks.size(); ++k) {
      const auto& t = ins.tasks[k];
      const std::string tpath = "instructions[" + std::to_string(i) + "].tasks[" + std::to_string(k) + "]";
      if (t.action == ingest::kUnknownAction && !covered(tpath + ".action")) return "unflagged action at " + tpath;
      for (const auto& o : t.objects) {
        if (o.name == ingest::kUnresolvedObject && !covered(tpath + ".objects")) return "unflagged object at " + tpath;
      }
    }
  }
  for (const auto& ing : r.ingredients) {
    if (ing.name == ingest::kUnresolvedIngredient && !covered("ingredients")) return "unflagged placeholder ingredient";
  }
  for (const auto& v : violations) {
    if (v.code == ViolationCode::kUndeclaredIngredient &&
        v.path.size() >= 12 && v.path.ends_with("[" + std::string(ingest::kUnresolvedObject) + "]")) {
      continue;
    }
    if (!covered(v.path)) return "unflagged violation " + std::string(to_string(v.code)) + " at " + v.path;
  }
  return {};
}

}  // namespace r3::testing
