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

// Statistical multilevel thresholding of detail sub-bands.
//
// The coefficient range of one sub-band is cut into at most L blocks and every
// coefficient is replaced by the mean of its block. Blocks are broad around
// the sub-band mean and get finer toward the tails of the histogram:
//
//   L = 3   cuts at mu - sigma and mu + sigma, giving a lower tail, a central
//           block of width 2 sigma, and an upper tail.
//   L = 5   each nonempty tail is additionally cut at its own mean mu_T.
//   L = 7   each tail's outermost piece is cut once more, at mu_T - sigma_T
//           (lower tail) or mu_T + sigma_T (upper tail), where mu_T and
//           sigma_T are the statistics of that tail's members.
//
// Every cut of a smaller L is a cut of every larger L, so the partitions are
// nested and quantization error never grows with L. Cuts that fall outside
// their tail's interval, or coincide with an existing cut, are dropped.
// Blocks are half-open [lo, hi); a coefficient equal to a cut belongs to the
// block above it. Blocks with no members are merged away.
//
// All sums run over the coefficients in ascending order, which makes the
// result independent of the order of the input.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wavseg/matrix.hpp"

namespace wavseg {

// Population statistics (1/N variance).
struct CoeffStats {
  double mean = 0.0;
  double std = 0.0;
  std::size_t count = 0;
};

// Throws InvalidArgument on empty input.
CoeffStats coeff_stats(std::span<const double> coeffs);

struct BlockPartition {
  std::vector<double> boundaries;       // strictly increasing
  std::vector<double> representatives;  // boundaries.size() + 1 entries
  int levels_requested = 3;

  std::size_t block_count() const { return representatives.size(); }
  // Index of the block holding `value`: the number of boundaries <= value.
  std::size_t block_of(double value) const;
};

// True for L in {3, 5, 7}.
bool valid_level_count(int levels);

// Cut points before empty blocks are merged. Nested in L by construction.
// Throws InvalidArgument on empty input or unsupported L.
std::vector<double> candidate_boundaries(std::span<const double> coeffs, int levels);

BlockPartition build_partition(std::span<const double> coeffs, int levels);

std::vector<double> apply_partition(std::span<const double> coeffs, const BlockPartition& p);
Matrix apply_partition(const Matrix& coeffs, const BlockPartition& p);

// apply_partition(mat, build_partition(mat, levels)).
Matrix threshold_subband(const Matrix& mat, int levels);

}  // namespace wavseg
