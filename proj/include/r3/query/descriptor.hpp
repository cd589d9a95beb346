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

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "r3/media/image.hpp"

namespace r3::query {

using Descriptor = std::vector<double>;

/// Pluggable image-to-vector transform. Similarity only needs descriptors
/// that are comparable by Euclidean distance, so a keypoint-based provider
/// can replace the default grid one.
class DescriptorProvider {
 public:
  virtual ~DescriptorProvider() = default;
  virtual std::string_view name() const = 0;
  virtual Descriptor describe(const media::Image& image) const = 0;
};

/// Fixed-grid gradient-orientation descriptor, 128 dimensions:
///  1. grayscale (0.299 R + 0.587 G + 0.114 B, scaled to [0,1])
///  2. bilinear resample to 64x64 (pixel-center aligned, edge clamped)
///  3. central-difference gradients, edge replicated
///  4. 4x4 grid of 16x16 cells, 8 orientation bins over [0, 2pi) per cell,
///     votes weighted by gradient magnitude
///  5. L2 normalization, unless every gradient is zero (zero vector)
class GridGradientDescriptor final : public DescriptorProvider {
 public:
  static constexpr int kSide = 64;
  static constexpr int kCells = 4;
  static constexpr int kBins = 8;
  static constexpr std::size_t kDimension = kCells * kCells * kBins;

  std::string_view name() const override { return "grid-gradient-v1"; }
  Descriptor describe(const media::Image& image) const override;
};

const DescriptorProvider& default_descriptor_provider();

std::vector<double> to_grayscale(const media::Image& image);
// Bilinear resample of a row-major grayscale buffer.
std::vector<double> resample_bilinear(std::span<const double> gray, int width, int height, int out_width,
                                      int out_height);

Descriptor image_descriptor(const media::Image& image);

double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// 1 / (1 + d), d the Euclidean distance between descriptors. In (0,1];
/// exactly 1 iff the descriptors are equal.
double descriptor_similarity(std::span<const double> a, std::span<const double> b);
double image_similarity(const media::Image& query, const media::Image& candidate,
                        const DescriptorProvider& provider = default_descriptor_provider());

}  // namespace r3::query
