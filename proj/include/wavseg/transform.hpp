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
#include <span>
#include <vector>

#include "wavseg/filterbank.hpp"
#include "wavseg/matrix.hpp"

namespace wavseg {

// Periodic orthogonal DWT.
//
// Analysis:  approx[k] = sum_n h[n] x[(2k + n) mod N]
//            detail[k] = sum_n g[n] x[(2k + n) mod N]
// The filter may be longer than the signal; indices wrap as often as needed.

struct Subbands1d {
  std::vector<double> approx;
  std::vector<double> detail;
};

// Throws InvalidArgument when the length is zero or odd.
Subbands1d dwt1d(std::span<const double> signal, const FilterBank& fb);

// Exact inverse of dwt1d. Throws DimensionError on a length mismatch or
// empty input.
std::vector<double> idwt1d(std::span<const double> approx, std::span<const double> detail,
                           const FilterBank& fb);

// Detail sub-bands of one level. h: row low-pass, column high-pass.
// v: row high-pass, column low-pass. d: high-pass in both directions.
struct SubbandTriple {
  Matrix h;
  Matrix v;
  Matrix d;
};

struct Decomposition {
  Matrix approx;
  std::vector<SubbandTriple> levels;  // levels[0] is the finest
  std::size_t source_width = 0;
  std::size_t source_height = 0;

  std::size_t depth() const { return levels.size(); }
};

// Separable transform: every row, then every column of both halves; recurses
// on the approximation. Width and height must be divisible by 2^depth,
// depth >= 1; otherwise DimensionError / InvalidArgument.
Decomposition dwt2d(const Matrix& plane, const FilterBank& fb, int depth);

// Throws DimensionError when the sub-band shapes do not match the
// documented bookkeeping for source size and depth.
Matrix idwt2d(const Decomposition& dec, const FilterBank& fb);

// Sum of squares over approx and every detail sub-band.
double energy(const Decomposition& dec);

}  // namespace wavseg
