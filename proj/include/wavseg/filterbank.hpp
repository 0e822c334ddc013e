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

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wavseg {

enum class WaveletFamily { Daubechies, Coiflet };

// A supported orthogonal wavelet: db2, db4, db6, db8 or coif1..coif5.
struct WaveletName {
  WaveletFamily family = WaveletFamily::Daubechies;
  int order = 2;

  std::string str() const;
  auto operator<=>(const WaveletName&) const = default;
};

// Parses "db2".."db8" (even orders) and "coif1".."coif5". Throws
// InvalidArgument listing the supported names otherwise.
WaveletName parse_wavelet(std::string_view text);

// All nine supported wavelets, Daubechies first.
const std::vector<WaveletName>& all_wavelets();
std::string supported_wavelet_list();

// Orthogonal two-channel analysis filter pair. `lowpass` is the scaling
// filter h, `highpass` the wavelet filter g = qmf_highpass(h). Both are
// indexed 0..length-1.
struct FilterBank {
  WaveletName name;
  std::vector<double> lowpass;
  std::vector<double> highpass;
  int vanishing_moments = 0;

  std::size_t length() const { return lowpass.size(); }
};

// Returns the immutable, process-wide filter bank. Filter lengths are checked
// when the table is first built (dbK: 2K taps, coifK: 6K taps).
const FilterBank& get_filter(WaveletName name);
const FilterBank& get_filter(std::string_view name);

// g[n] = (-1)^n h[L-1-n]. Throws InvalidArgument for odd or empty input.
std::vector<double> qmf_highpass(std::span<const double> lowpass);

struct SynthesisFilters {
  std::vector<double> lowpass;
  std::vector<double> highpass;
};

// Orthogonal case: synthesis filters are the time-reversed analysis filters.
SynthesisFilters synthesis_pair(const FilterBank& fb);

}  // namespace wavseg
