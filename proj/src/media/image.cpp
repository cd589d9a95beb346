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

#include "r3/media/image.hpp"

#include <png.h>

#include <cstring>
#include <string>

#include "r3/common/error.hpp"
#include "r3/common/text.hpp"

namespace r3::media {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::kImageDecode, "cannot decode image: " + what); }

Image decode_png(std::span<const std::uint8_t> bytes) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  if (png_image_begin_read_from_memory(&png, bytes.data(), bytes.size()) == 0) fail(png.message);
  png.format = PNG_FORMAT_RGB;
  Image img;
  img.width = static_cast<int>(png.width);
  img.height = static_cast<int>(png.height);
  img.channels = 3;
  img.pixels.resize(PNG_IMAGE_SIZE(png));
  if (png_image_finish_read(&png, nullptr, img.pixels.data(), 0, nullptr) == 0) {
    std::string msg = png.message;
    png_image_free(&png);
    fail(msg);
  }
  return img;
}

class PnmReader {
 public:
  explicit PnmReader(std::span<const std::uint8_t> b) : b_(b) {}

  int next_int() {
    skip_space_and_comments();
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < b_.size() && b_[pos_] >= '0' && b_[pos_] <= '9') {
      value = value * 10 + (b_[pos_] - '0');
      if (++digits > 6) fail("PNM header value too large");
      ++pos_;
    }
    if (digits == 0) fail("malformed PNM header");
    return static_cast<int>(value);
  }
  void skip_single_space() {
    if (pos_ >= b_.size()) fail("truncated PNM header");
    ++pos_;
  }
  std::size_t pos() const { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < b_.size()) {
      const auto c = b_[pos_];
      if (c == '#') {
        while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> b_;
  std::size_t pos_ = 2;
};

Image decode_pnm(std::span<const std::uint8_t> bytes) {
  const int channels = bytes[1] == '5' ? 1 : 3;
  PnmReader r(bytes);
  Image img;
  img.width = r.next_int();
  img.height = r.next_int();
  const int maxval = r.next_int();
  if (maxval != 255) fail("only 8-bit PNM is supported");
  r.skip_single_space();
  img.channels = channels;
  const std::size_t need =
      static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height) * static_cast<std::size_t>(channels);
  if (bytes.size() - r.pos() < need) fail("truncated PNM pixel data");
  img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(r.pos()),
                    bytes.begin() + static_cast<std::ptrdiff_t>(r.pos() + need));
  return img;
}

}  // namespace

Image decode_image(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t kPngMagic[] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  Image img;
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngMagic, 8) == 0) {
    img = decode_png(bytes);
  } else if (bytes.size() >= 3 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6')) {
    img = decode_pnm(bytes);
  } else {
    fail("unrecognized format (expected PNG or binary PNM)");
  }
  if (img.width < kMinImageSide || img.height < kMinImageSide) {
    throw Error(ErrorCode::kImageDecode, "image smaller than " + std::to_string(kMinImageSide) + "x" +
                                             std::to_string(kMinImageSide),
                std::to_string(img.width) + "x" + std::to_string(img.height));
  }
  return img;
}

Image load_image(const std::filesystem::path& path) {
  const std::string data = text::read_file(path);
  try {
    return decode_image(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), path.string());
  }
}

std::vector<std::uint8_t> encode_pgm(const Image& gray) {
  const std::string header = "P5\n" + std::to_string(gray.width) + " " + std::to_string(gray.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (int y = 0; y < gray.height; ++y) {
    for (int x = 0; x < gray.width; ++x) out.push_back(gray.at(x, y, 0));
  }
  return out;
}

}  // namespace r3::media
