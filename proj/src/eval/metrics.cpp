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

#include "r3/eval/metrics.hpp"

namespace r3::eval {

std::size_t intersection_size(const IdSet& a, const IdSet& b) {
  const IdSet& small = a.size() <= b.size() ? a : b;
  const IdSet& large = a.size() <= b.size() ? b : a;
  std::size_t n = 0;
  for (const auto& id : small) n += large.count(id);
  return n;
}

double cvg(const IdSet& retrieved, const IdSet& truth) {
  if (truth.empty()) return retrieved.empty() ? 1.0 : 0.0;
  return static_cast<double>(intersection_size(retrieved, truth)) / static_cast<double>(truth.size());
}

double iou(const IdSet& retrieved, const IdSet& truth) {
  const std::size_t inter = intersection_size(retrieved, truth);
  const std::size_t uni = retrieved.size() + truth.size() - inter;
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace r3::eval
