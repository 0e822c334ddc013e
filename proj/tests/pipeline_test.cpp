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

#include "wavseg/pipeline.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wavseg/error.hpp"

namespace wavseg {
namespace {

RgbImage corpus_image(const char* name) {
  return read_image_file(std::string(WAVSEG_TEST_DATA) + "/" + name);
}

RgbImage crop(const RgbImage& img, std::size_t x0, std::size_t y0, std::size_t w,
              std::size_t h) {
  auto cut = [&](const ImagePlane& p) {
    ImagePlane out(w, h);
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) out.at(x, y) = p.at(x0 + x, y0 + y);
    }
    return out;
  };
  return RgbImage(cut(img.r()), cut(img.g()), cut(img.b()));
}

// Recorded from the first run of this pipeline; guards against silent changes.
constexpr double kNaturalCropDb2L3 = 33.261407343646468;

const WaveletName kDb2{WaveletFamily::Daubechies, 2};
const WaveletName kCoif5{WaveletFamily::Coiflet, 5};

TEST(ProcessPlane, ConstantPlaneIsFixpoint) {
  for (const auto& w : all_wavelets()) {
    for (int levels : {3, 5, 7}) {
      for (std::uint8_t v : {std::uint8_t{0}, std::uint8_t{37}, std::uint8_t{255}}) {
        const ImagePlane plane(16, 8, v);
        EXPECT_EQ(process_plane(plane, {w, 2, levels}), plane) << w.str();
      }
    }
  }
}

TEST(ProcessPlane, IdentityQuantizerReconstructs) {
  std::mt19937_64 rng(64);
  const auto plane = testing::random_plane(rng, 32, 16);
  const auto identity = [](const Matrix& m) { return m; };
  for (const auto& w : all_wavelets()) {
    EXPECT_EQ(process_plane(plane, get_filter(w), 3, identity), plane) << w.str();
  }
}

TEST(ProcessPlane, PropagatesDivisibilityError) {
  const ImagePlane plane(12, 12);
  EXPECT_THROW(process_plane(plane, {kDb2, 3, 3}), DimensionError);
  EXPECT_THROW(process_plane(plane, {kDb2, 1, 4}), InvalidArgument);
}

TEST(ProcessPlane, RoundsAndClamps) {
  Matrix m(1, 4);
  m(0, 0) = -3.2;
  m(0, 1) = 2.5;
  m(0, 2) = 254.4999;
  m(0, 3) = 300.0;
  const auto p = to_plane(m);
  EXPECT_EQ(p.at(0, 0), 0);
  EXPECT_EQ(p.at(1, 0), 3);
  EXPECT_EQ(p.at(2, 0), 254);
  EXPECT_EQ(p.at(3, 0), 255);
}

TEST(ProcessPlane, NaturalCropRegressionAnchor) {
  const auto img = crop(corpus_image("astronaut.ppm"), 192, 64, 64, 64);
  const auto out = process_image(img, {kDb2, 1, 3});
  const double db = psnr(img, out);
  EXPECT_TRUE(std::isfinite(db));
  EXPECT_GT(db, 20.0);
  EXPECT_NEAR(db, kNaturalCropDb2L3, 1e-9);
}

TEST(ProcessImage, GrayscaleStaysGray) {
  std::mt19937_64 rng(3);
  const auto gray = testing::random_plane(rng, 16, 16);
  const auto out = process_image(RgbImage(gray, gray, gray), {kCoif5, 2, 5});
  EXPECT_EQ(out.r(), out.g());
  EXPECT_EQ(out.g(), out.b());
}

TEST(ProcessImage, SolidColorUnchanged) {
  const RgbImage img(ImagePlane(8, 8, std::uint8_t{200}), ImagePlane(8, 8, std::uint8_t{10}),
                     ImagePlane(8, 8, std::uint8_t{99}));
  for (const auto& w : all_wavelets()) EXPECT_EQ(process_image(img, {w, 3, 7}), img);
}

TEST(ProcessImage, NaturalImageBothFamiliesValid) {
  const auto img = crop(corpus_image("coffee.ppm"), 128, 64, 128, 128);
  for (const auto& w : {kDb2, kCoif5}) {
    const auto out = process_image(img, {w, 1, 7});
    EXPECT_EQ(out.width(), img.width());
    const double db = psnr(img, out);
    EXPECT_GT(db, 20.0) << w.str();
    EXPECT_LT(db, 60.0) << w.str();
  }
}

TEST(Psnr, IdenticalIsInfinite) {
  std::mt19937_64 rng(1);
  const auto img = testing::random_image(rng, 4, 4);
  const double db = psnr(img, img);
  EXPECT_TRUE(std::isinf(db));
  EXPECT_GT(db, 0.0);
}

TEST(Psnr, FullScaleDifferenceIsZeroDb) {
  const ImagePlane black(1, 1, std::uint8_t{0});
  const ImagePlane white(1, 1, std::uint8_t{255});
  EXPECT_DOUBLE_EQ(psnr(RgbImage(black, black, black), RgbImage(white, white, white)), 0.0);
}

TEST(Psnr, PooledOverChannels) {
  // One channel off by 3 everywhere: MSE = 9 / 3 = 3.
  const ImagePlane a(2, 2, std::uint8_t{10});
  const ImagePlane b(2, 2, std::uint8_t{13});
  EXPECT_NEAR(psnr(RgbImage(a, a, a), RgbImage(a, b, a)),
              10.0 * std::log10(255.0 * 255.0 / 3.0), 1e-12);
}

TEST(Psnr, Symmetric) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto a = testing::random_image(rng, 5, 3);
    const auto b = testing::random_image(rng, 5, 3);
    EXPECT_EQ(psnr(a, b), psnr(b, a));
  }
}

TEST(Psnr, RejectsSizeMismatch) {
  const ImagePlane a(2, 2);
  const ImagePlane b(2, 3);
  EXPECT_THROW(psnr(RgbImage(a, a, a), RgbImage(b, b, b)), DimensionError);
}

TEST(RunExperiment, FullGridOrdering) {
  std::mt19937_64 rng(27);
  const auto img = testing::random_image(rng, 16, 16);
  const auto records = run_experiment(img, "rand", all_wavelets(), {3, 5, 7}, 1);
  ASSERT_EQ(records.size(), 27u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].image_id, "rand");
    EXPECT_EQ(records[i].wavelet, all_wavelets()[i / 3]);
    EXPECT_EQ(records[i].levels, std::vector<int>({3, 5, 7})[i % 3]);
    EXPECT_GT(records[i].psnr_db, 0.0);
  }
}

TEST(RunExperiment, SingleCombination) {
  std::mt19937_64 rng(28);
  const auto img = testing::random_image(rng, 8, 8);
  const auto records = run_experiment(img, "one", {kCoif5}, {5}, 2);
  ASSERT_EQ(records.size(), 1u);
  const auto out = process_image(img, {kCoif5, 2, 5});
  EXPECT_EQ(records[0].psnr_db, psnr(img, out));
  EXPECT_EQ(records[0].size_bytes, encoded_size(out));
}

TEST(RunExperiment, IndependentOfThreadCount) {
  const auto img = crop(corpus_image("chelsea.ppm"), 0, 0, 64, 64);
  const auto serial = run_experiment(img, "c", all_wavelets(), {3, 5, 7}, 2, {1});
  const auto parallel = run_experiment(img, "c", all_wavelets(), {3, 5, 7}, 2, {4});
  EXPECT_EQ(serial, parallel);
}

TEST(RunExperiment, LevelsMonotoneOnNaturalCrop) {
  const auto img = crop(corpus_image("astronaut.ppm"), 128, 128, 128, 128);
  const auto records = run_experiment(img, "a", all_wavelets(), {3, 5, 7}, 1);
  for (std::size_t i = 0; i < records.size(); i += 3) {
    EXPECT_GE(records[i + 1].psnr_db, records[i].psnr_db - 0.01) << records[i].wavelet.str();
    EXPECT_GE(records[i + 2].psnr_db, records[i + 1].psnr_db - 0.01) << records[i].wavelet.str();
  }
}

TEST(RunExperiment, ErrorsCarryContext) {
  const ImagePlane p(12, 12);
  const RgbImage img(p, p, p);
  try {
    run_experiment(img, "odd", {kDb2}, {3}, 3);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("odd"), std::string::npos);
    EXPECT_NE(msg.find("db2"), std::string::npos);
    EXPECT_NE(msg.find("L=3"), std::string::npos);
  }
  EXPECT_THROW(run_experiment(img, "x", {}, {3}, 1), InvalidArgument);
  EXPECT_THROW(run_experiment(img, "x", {kDb2}, {}, 1), InvalidArgument);
}

}  // namespace
}  // namespace wavseg
