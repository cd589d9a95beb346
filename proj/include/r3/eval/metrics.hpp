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

#include <set>
#include <string>

namespace r3::eval {

using IdSet = std::set<std::string>;

/// Coverage of ground truth: |retrieved ∩ truth| / |truth|. With an empty
/// truth set: 1.0 if nothing was retrieved, else 0.0.
double cvg(const IdSet& retrieved, const IdSet& truth);

/// |retrieved ∩ truth| / |retrieved ∪ truth|; 1.0 when both are empty.
double iou(const IdSet& retrieved, const IdSet& truth);

std::size_t intersection_size(const IdSet& a, const IdSet& b);

}  // namespace r3::eval
