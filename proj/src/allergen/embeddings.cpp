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

#include "r3/allergen/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"

namespace r3::allergen {

namespace {

bool is_header(const std::vector<std::string>& fields) {
  if (fields.size() != 2) return false;
  for (const auto& f : fields) {
    if (f.empty() || f.find_first_not_of("0123456789") != std::string::npos) return false;
  }
  return true;
}

}  // namespace

EmbeddingTable EmbeddingTable::parse(std::istream& in, std::string_view source) {
  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields_in(line);
    std::vector<std::string> fields;
    for (std::string f; fields_in >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    if (line_no == 1 && is_header(fields)) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (fields.size() < 2) throw Error(ErrorCode::kParse, "embedding line without components", where);

    std::vector<double> v;
    v.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double x = 0;
      try {
        std::size_t used = 0;
        x = std::stod(fields[i], &used);
        if (used != fields[i].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse, "non-numeric embedding component '" + fields[i] + "'", where);
      }
      if (!std::isfinite(x)) throw Error(ErrorCode::kParse, "non-finite embedding component", where);
      v.push_back(x);
    }
    if (table.dimension_ == 0) table.dimension_ = v.size();
    if (v.size() != table.dimension_) {
      throw Error(ErrorCode::kParse,
                  "dimension mismatch: expected " + std::to_string(table.dimension_) + ", got " + std::to_string(v.size()),
                  where);
    }
    table.vectors_[text::casefold(fields[0])] = std::move(v);
  }
  return table;
}

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read embeddings", path.string());
  return parse(in, path.string());
}

const std::vector<double>* EmbeddingTable::find(std::string_view token) const {
  const auto it = vectors_.find(token);
  return it == vectors_.end() ? nullptr : &it->second;
}

std::optional<std::vector<double>> EmbeddingTable::phrase_vector(std::string_view phrase) const {
  std::vector<double> sum(dimension_, 0.0);
  std::size_t found = 0;
  for (const auto& token : text::tokenize(phrase)) {
    const auto* v = find(token);
    if (v == nullptr) continue;
    for (std::size_t i = 0; i < dimension_; ++i) sum[i] += (*v)[i];
    ++found;
  }
  if (found == 0) return std::nullopt;
  for (auto& x : sum) x /= static_cast<double>(found);
  return sum;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "cosine of vectors with different dimension");
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0 || nb == 0) return 0.0;
  const double c = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace r3::allergen
