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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "wavseg/error.hpp"
#include "wavseg/quantizer.hpp"
#include "wavseg/transform.hpp"

namespace wavseg {

void validate(const PipelineConfig& cfg) {
  if (!valid_level_count(cfg.levels)) {
    throw InvalidArgument("levels must be in {3,5,7}, got " + std::to_string(cfg.levels));
  }
  if (cfg.depth < 1) throw InvalidArgument("depth must be >= 1, got " + std::to_string(cfg.depth));
}

Matrix to_matrix(const ImagePlane& plane) {
  Matrix m(plane.height(), plane.width());
  const auto px = plane.pixels();
  auto dst = m.values();
  for (std::size_t i = 0; i < px.size(); ++i) dst[i] = px[i];
  return m;
}

ImagePlane to_plane(const Matrix& m) {
  std::vector<std::uint8_t> px(m.size());
  const auto src = m.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    px[i] = static_cast<std::uint8_t>(std::clamp(std::round(src[i]), 0.0, 255.0));
  }
  return ImagePlane(m.cols(), m.rows(), std::move(px));
}

ImagePlane process_plane(const ImagePlane& plane, const FilterBank& fb, int depth,
                         const SubbandQuantizer& quantize) {
  Decomposition dec = dwt2d(to_matrix(plane), fb, depth);
  for (auto& level : dec.levels) {
    level.h = quantize(level.h);
    level.v = quantize(level.v);
    level.d = quantize(level.d);
  }
  return to_plane(idwt2d(dec, fb));
}

ImagePlane process_plane(const ImagePlane& plane, const PipelineConfig& cfg) {
  validate(cfg);
  const int levels = cfg.levels;
  return process_plane(plane, get_filter(cfg.wavelet), cfg.depth,
                       [levels](const Matrix& m) { return threshold_subband(m, levels); });
}

RgbImage process_image(const RgbImage& img, const PipelineConfig& cfg) {
  return RgbImage(process_plane(img.r(), cfg), process_plane(img.g(), cfg),
                  process_plane(img.b(), cfg));
}

double psnr(const RgbImage& orig, const RgbImage& recon) {
  if (orig.width() != recon.width() || orig.height() != recon.height()) {
    throw DimensionError("psnr: images are " + std::to_string(orig.width()) + "x" +
                         std::to_string(orig.height()) + " and " + std::to_string(recon.width()) +
                         "x" + std::to_string(recon.height()));
  }
  // Integer accumulation keeps the result exact and symmetric.
  std::uint64_t sse = 0;
  auto accumulate = [&sse](const ImagePlane& a, const ImagePlane& b) {
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
      const int diff = int{pa[i]} - int{pb[i]};
      sse += static_cast<std::uint64_t>(diff * diff);
    }
  };
  accumulate(orig.r(), recon.r());
  accumulate(orig.g(), recon.g());
  accumulate(orig.b(), recon.b());
  if (sse == 0) return std::numeric_limits<double>::infinity();
  const double samples = 3.0 * static_cast<double>(orig.width() * orig.height());
  const double mse = static_cast<double>(sse) / samples;
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

std::vector<MetricsRecord> run_experiment(const RgbImage& img, const std::string& image_id,
                                          const std::vector<WaveletName>& wavelets,
                                          const std::vector<int>& levels_list, int depth,
                                          ExperimentOptions options) {
  if (wavelets.empty()) throw InvalidArgument("run_experiment: no wavelets given");
  if (levels_list.empty()) throw InvalidArgument("run_experiment: no level counts given");

  struct Job {
    PipelineConfig cfg;
  };
  std::vector<Job> jobs;
  for (const auto& w : wavelets) {
    for (int levels : levels_list) jobs.push_back({{w, depth, levels}});
  }

  std::vector<MetricsRecord> records(jobs.size());
  std::vector<std::exception_ptr> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size() && !failed; i = next++) {
      const auto& cfg = jobs[i].cfg;
      try {
        const RgbImage out = process_image(img, cfg);
        records[i] = {image_id, cfg.wavelet, cfg.levels, psnr(img, out), encoded_size(out)};
      } catch (...) {
        failures[i] = std::current_exception();
        failed = true;
      }
    }
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!failures[i]) continue;
    const auto& cfg = jobs[i].cfg;
    const std::string context =
        image_id + " " + cfg.wavelet.str() + " L=" + std::to_string(cfg.levels) + ": ";
    try {
      std::rethrow_exception(failures[i]);
    } catch (const std::exception& e) {
      throw Error(context + e.what());
    }
  }
  return records;
}

}  // namespace wavseg
