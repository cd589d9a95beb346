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

#include "r3/query/descriptor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "r3/common/error.hpp"

namespace r3::query {

std::vector<double> to_grayscale(const media::Image& image) {
  std::vector<double> gray(static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height));
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      double v = 0.0;
      if (image.channels >= 3) {
        v = 0.299 * image.at(x, y, 0) + 0.587 * image.at(x, y, 1) + 0.114 * image.at(x, y, 2);
      } else {
        v = image.at(x, y, 0);
      }
      gray[static_cast<std::size_t>(y) * static_cast<std::size_t>(image.width) + static_cast<std::size_t>(x)] =
          v / 255.0;
    }
  }
  return gray;
}

std::vector<double> resample_bilinear(std::span<const double> gray, int width, int height, int out_width,
                                      int out_height) {
  std::vector<double> out(static_cast<std::size_t>(out_width) * static_cast<std::size_t>(out_height));
  auto px = [&](int x, int y) {
    return gray[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
  };
  const double sx = static_cast<double>(width) / out_width;
  const double sy = static_cast<double>(height) / out_height;
  for (int oy = 0; oy < out_height; ++oy) {
    const double fy = std::clamp((oy + 0.5) * sy - 0.5, 0.0, static_cast<double>(height - 1));
    const int y0 = static_cast<int>(std::floor(fy));
    const int y1 = std::min(y0 + 1, height - 1);
    const double wy = fy - y0;
    for (int ox = 0; ox < out_width; ++ox) {
      const double fx = std::clamp((ox + 0.5) * sx - 0.5, 0.0, static_cast<double>(width - 1));
      const int x0 = static_cast<int>(std::floor(fx));
      const int x1 = std::min(x0 + 1, width - 1);
      const double wx = fx - x0;
      const double top = px(x0, y0) * (1.0 - wx) + px(x1, y0) * wx;
      const double bottom = px(x0, y1) * (1.0 - wx) + px(x1, y1) * wx;
      out[static_cast<std::size_t>(oy) * static_cast<std::size_t>(out_width) + static_cast<std::size_t>(ox)] =
          top * (1.0 - wy) + bottom * wy;
    }
  }
  return out;
}

Descriptor GridGradientDescriptor::describe(const media::Image& image) const {
  if (image.width < media::kMinImageSide || image.height < media::kMinImageSide) {
    throw Error(ErrorCode::kImageDecode, "image too small for descriptor");
  }
  const auto gray = to_grayscale(image);
  const auto g = resample_bilinear(gray, image.width, image.height, kSide, kSide);
  auto at = [&](int x, int y) {
    x = std::clamp(x, 0, kSide - 1);
    y = std::clamp(y, 0, kSide - 1);
    return g[static_cast<std::size_t>(y * kSide + x)];
  };

  constexpr int cell = kSide / kCells;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  Descriptor d(kDimension, 0.0);
  for (int y = 0; y < kSide; ++y) {
    for (int x = 0; x < kSide; ++x) {
      const double gx = at(x + 1, y) - at(x - 1, y);
      const double gy = at(x, y + 1) - at(x, y - 1);
      const double magnitude = std::sqrt(gx * gx + gy * gy);
      if (magnitude == 0.0) continue;
      double theta = std::atan2(gy, gx);
      if (theta < 0) theta += two_pi;
      int bin = static_cast<int>(theta / (two_pi / kBins));
      if (bin >= kBins) bin = kBins - 1;
      const int c = (y / cell) * kCells + (x / cell);
      d[static_cast<std::size_t>(c * kBins + bin)] += magnitude;
    }
  }
  double norm = 0.0;
  for (double v : d) norm += v * v;
  if (norm == 0.0) return d;
  norm = std::sqrt(norm);
  for (double& v : d) v /= norm;
  return d;
}

const DescriptorProvider& default_descriptor_provider() {
  static const GridGradientDescriptor provider;
  return provider;
}

Descriptor image_descriptor(const media::Image& image) { return default_descriptor_provider().describe(image); }

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "descriptor dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double descriptor_similarity(std::span<const double> a, std::span<const double> b) {
  return 1.0 / (1.0 + euclidean_distance(a, b));
}

double image_similarity(const media::Image& query, const media::Image& candidate, const DescriptorProvider& provider) {
  return descriptor_similarity(provider.describe(query), provider.describe(candidate));
}

}  // namespace r3::query
