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

#include "wavseg/image.hpp"

#include <zlib.h>

#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "wavseg/error.hpp"

namespace wavseg {

ImagePlane::ImagePlane(std::size_t width, std::size_t height,
                       std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) {
    throw DimensionError("image plane dimensions must be positive, got " +
                         std::to_string(width_) + "x" + std::to_string(height_));
  }
  if (pixels_.size() != width_ * height_) {
    throw DimensionError("image plane has " + std::to_string(pixels_.size()) +
                         " pixels, expected " + std::to_string(width_ * height_));
  }
}

ImagePlane::ImagePlane(std::size_t width, std::size_t height, std::uint8_t fill)
    : ImagePlane(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

RgbImage::RgbImage(ImagePlane r, ImagePlane g, ImagePlane b)
    : r_(std::move(r)), g_(std::move(g)), b_(std::move(b)) {
  auto check = [this](const ImagePlane& p, const char* name) {
    if (p.width() != r_.width() || p.height() != r_.height()) {
      throw DimensionError(std::string(name) + " plane is " + std::to_string(p.width()) +
                           "x" + std::to_string(p.height()) + " but r plane is " +
                           std::to_string(r_.width()) + "x" + std::to_string(r_.height()));
    }
  };
  check(g_, "g");
  check(b_, "b");
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  static bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t read_uint(const char* field) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) {
      throw FormatError(std::string("truncated header: missing ") + field);
    }
    if (bytes_[pos_] < '0' || bytes_[pos_] > '9') {
      throw FormatError(std::string("malformed header: ") + field + " is not a number");
    }
    std::size_t value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw FormatError(std::string("malformed header: ") + field + " is too large");
      }
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void expect_single_space(const char* after) {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw FormatError(std::string("malformed header: expected whitespace after ") + after);
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

RgbImage read_image(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw FormatError("malformed header: magic must be P5 or P6");
  }
  const bool color = bytes[1] == '6';
  HeaderReader header(bytes);
  header.advance(2);
  if (bytes.size() > 2 && !HeaderReader::is_space(bytes[2]) && bytes[2] != '#') {
    throw FormatError("malformed header: magic must be P5 or P6");
  }
  const std::size_t width = header.read_uint("width");
  const std::size_t height = header.read_uint("height");
  const std::size_t maxval = header.read_uint("maxval");
  if (width == 0) throw FormatError("malformed header: width must be positive");
  if (height == 0) throw FormatError("malformed header: height must be positive");
  if (maxval != 255) {
    throw FormatError("unsupported maxval " + std::to_string(maxval) + " (only 255)");
  }
  header.expect_single_space("maxval");

  const std::size_t count = width * height;
  const std::size_t needed = count * (color ? 3 : 1);
  const std::size_t available = bytes.size() - header.pos();
  if (available < needed) {
    throw FormatError("truncated payload: expected " + std::to_string(needed) +
                      " bytes, got " + std::to_string(available));
  }
  const auto* raster = bytes.data() + header.pos();

  if (!color) {
    ImagePlane gray(width, height, std::vector<std::uint8_t>(raster, raster + count));
    return RgbImage(gray, gray, gray);
  }
  std::vector<std::uint8_t> r(count), g(count), b(count);
  for (std::size_t i = 0; i < count; ++i) {
    r[i] = raster[3 * i];
    g[i] = raster[3 * i + 1];
    b[i] = raster[3 * i + 2];
  }
  return RgbImage(ImagePlane(width, height, std::move(r)),
                  ImagePlane(width, height, std::move(g)),
                  ImagePlane(width, height, std::move(b)));
}

std::vector<std::uint8_t> interleave(const RgbImage& img) {
  const std::size_t count = img.width() * img.height();
  std::vector<std::uint8_t> out(3 * count);
  const auto r = img.r().pixels();
  const auto g = img.g().pixels();
  const auto b = img.b().pixels();
  for (std::size_t i = 0; i < count; ++i) {
    out[3 * i] = r[i];
    out[3 * i + 1] = g[i];
    out[3 * i + 2] = b[i];
  }
  return out;
}

std::vector<std::uint8_t> write_image(const RgbImage& img) {
  const std::string header =
      "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto raster = interleave(img);
  out.insert(out.end(), raster.begin(), raster.end());
  return out;
}

std::tuple<ImagePlane, ImagePlane, ImagePlane> split_channels(const RgbImage& img) {
  return {img.r(), img.g(), img.b()};
}

RgbImage merge_channels(ImagePlane r, ImagePlane g, ImagePlane b) {
  return RgbImage(std::move(r), std::move(g), std::move(b));
}

std::size_t encoded_size(const RgbImage& img) {
  auto raster = interleave(img);

  z_stream stream{};
  if (deflateInit2(&stream, Z_DEFAULT_COMPRESSION, Z_DEFLATED, -15, 8,
                   Z_DEFAULT_STRATEGY) != Z_OK) {
    throw Error("deflateInit2 failed");
  }
  std::vector<std::uint8_t> out(deflateBound(&stream, static_cast<uLong>(raster.size())));
  stream.next_in = raster.data();
  stream.avail_in = static_cast<uInt>(raster.size());
  stream.next_out = out.data();
  stream.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&stream, Z_FINISH);
  const std::size_t produced = stream.total_out;
  deflateEnd(&stream);
  if (rc != Z_STREAM_END) throw Error("deflate did not finish");
  return produced;
}

RgbImage read_image_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return read_image(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_image_file(const RgbImage& img, const std::filesystem::path& path) {
  const auto bytes = write_image(img);
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace wavseg
