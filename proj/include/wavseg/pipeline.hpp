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
#include <functional>
#include <string>
#include <vector>

#include "wavseg/filterbank.hpp"
#include "wavseg/image.hpp"
#include "wavseg/matrix.hpp"

namespace wavseg {

struct PipelineConfig {
  WaveletName wavelet;
  int depth = 1;
  int levels = 3;
};

// Throws InvalidArgument unless levels is in {3,5,7} and depth >= 1.
void validate(const PipelineConfig& cfg);

struct MetricsRecord {
  std::string image_id;
  WaveletName wavelet;
  int levels = 0;
  double psnr_db = 0.0;  // +inf when the images are identical
  std::size_t size_bytes = 0;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

// Maps one detail sub-band to its quantized version.
using SubbandQuantizer = std::function<Matrix(const Matrix&)>;

Matrix to_matrix(const ImagePlane& plane);
// Rounds half away from zero, then clamps to [0, 255].
ImagePlane to_plane(const Matrix& m);

// Decompose, quantize every H/V/D sub-band at every level (the approximation
// is left alone), reconstruct, round and clamp.
ImagePlane process_plane(const ImagePlane& plane, const FilterBank& fb, int depth,
                         const SubbandQuantizer& quantize);
ImagePlane process_plane(const ImagePlane& plane, const PipelineConfig& cfg);
RgbImage process_image(const RgbImage& img, const PipelineConfig& cfg);

// Pooled over all three channels. Returns +inf for identical images; throws
// DimensionError on a size mismatch.
double psnr(const RgbImage& orig, const RgbImage& recon);

struct ExperimentOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

// One record per (wavelet, levels) pair, wavelets outer and levels inner.
// The first failing combination aborts the run with an Error naming the
// image, wavelet and level count. Output is independent of `threads`.
std::vector<MetricsRecord> run_experiment(const RgbImage& img, const std::string& image_id,
                                          const std::vector<WaveletName>& wavelets,
                                          const std::vector<int>& levels_list, int depth,
                                          ExperimentOptions options = {});

}  // namespace wavseg
