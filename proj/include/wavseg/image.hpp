// Copyright 2026 The wavseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <tuple>
#include <vector>

namespace wavseg {

// One 8-bit channel, row-major with the origin at the top-left corner.
class ImagePlane {
 public:
  ImagePlane() = default;
  // Throws DimensionError when a dimension is zero or the pixel count does
  // not equal width * height.
  ImagePlane(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
  ImagePlane(std::size_t width, std::size_t height, std::uint8_t fill = 0);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> pixels() { return pixels_; }

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Three planes of identical size.
class RgbImage {
 public:
  RgbImage() = default;
  // Throws DimensionError naming the first plane whose size differs from r.
  RgbImage(ImagePlane r, ImagePlane g, ImagePlane b);

  std::size_t width() const { return r_.width(); }
  std::size_t height() const { return r_.height(); }

  const ImagePlane& r() const { return r_; }
  const ImagePlane& g() const { return g_; }
  const ImagePlane& b() const { return b_; }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  ImagePlane r_;
  ImagePlane g_;
  ImagePlane b_;
};

// Decodes binary PPM (P6) or PGM (P5) with maxval 255. Header comments
// ('#' to end of line) are skipped. PGM input is promoted to RGB by
// copying the gray plane into all three channels. Throws FormatError.
RgbImage read_image(std::span<const std::uint8_t> bytes);

// Encodes as binary PPM: "P6\n<w> <h>\n255\n" followed by interleaved RGB.
std::vector<std::uint8_t> write_image(const RgbImage& img);

std::tuple<ImagePlane, ImagePlane, ImagePlane> split_channels(const RgbImage& img);
RgbImage merge_channels(ImagePlane r, ImagePlane g, ImagePlane b);

// Interleaved R,G,B bytes in row-major order.
std::vector<std::uint8_t> interleave(const RgbImage& img);

// Raw DEFLATE byte count of the interleaved pixel stream (zlib default
// level, default strategy, no container header).
std::size_t encoded_size(const RgbImage& img);

RgbImage read_image_file(const std::filesystem::path& path);
void write_image_file(const RgbImage& img, const std::filesystem::path& path);

}  // namespace wavseg
