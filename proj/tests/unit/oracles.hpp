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
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace r3::testing {

// Textbook full-matrix edit distance; deliberately unlike the single-row
// production version.
inline std::size_t dp_edit_distance(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

inline std::u32string ascii_lower(std::u32string s) {
  for (auto& c : s) {
    if (c >= U'A' && c <= U'Z') c = c - U'A' + U'a';
  }
  return s;
}

// Similarity from the oracle distance on strings that are already
// whitespace-normalized.
inline double dp_similarity(const std::u32string& a, const std::u32string& b) {
  const auto la = ascii_lower(a);
  const auto lb = ascii_lower(b);
  const std::size_t longest = std::max(la.size(), lb.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(dp_edit_distance(la, lb)) / static_cast<double>(longest);
}

inline std::string encode_utf8(const std::u32string& s) {
  std::string out;
  for (char32_t cp : s) {
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
  }
  return out;
}

// Random string over a small alphabet (so edits collide often) without
// whitespace, mixing cases and multi-byte code points.
template <typename Rng>
std::u32string random_word(Rng& rng, std::size_t max_len) {
  static const std::u32string kAlphabet = U"abcdeABCDEéü中😀";
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, kAlphabet.size() - 1);
  std::u32string s;
  for (auto n = len(rng); n > 0; --n) s.push_back(kAlphabet[pick(rng)]);
  return s;
}

// Set-counting oracle for the two retrieval metrics over bitmask subsets.
struct MaskMetrics {
  double cvg;
  double iou;
};

inline MaskMetrics mask_metrics(unsigned retrieved, unsigned truth, unsigned universe_bits) {
  int both = 0, only_r = 0, only_t = 0;
  for (unsigned bit = 0; bit < universe_bits; ++bit) {
    const bool r = (retrieved >> bit) & 1u;
    const bool t = (truth >> bit) & 1u;
    both += r && t;
    only_r += r && !t;
    only_t += t && !r;
  }
  const int truth_size = both + only_t;
  const int union_size = both + only_r + only_t;
  MaskMetrics m{};
  m.cvg = truth_size == 0 ? (both + only_r == 0 ? 1.0 : 0.0) : static_cast<double>(both) / truth_size;
  m.iou = union_size == 0 ? 1.0 : static_cast<double>(both) / union_size;
  return m;
}

inline std::set<std::string> mask_to_set(unsigned mask, unsigned universe_bits) {
  std::set<std::string> out;
  for (unsigned bit = 0; bit < universe_bits; ++bit) {
    if ((mask >> bit) & 1u) out.insert(std::string(1, static_cast<char>('a' + bit)));
  }
  return out;
}

}  // namespace r3::testing
