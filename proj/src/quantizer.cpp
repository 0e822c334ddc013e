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

#include "wavseg/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "wavseg/error.hpp"

namespace wavseg {

namespace {

// `sorted` must be ascending and nonempty.
CoeffStats sorted_stats(std::span<const double> sorted) {
  const std::size_t n = sorted.size();
  if (sorted.front() == sorted.back()) return {sorted.front(), 0.0, n};
  double sum = 0.0;
  for (double c : sorted) sum += c;
  const double mean = sum / static_cast<double>(n);
  double sq = 0.0;
  for (double c : sorted) sq += (c - mean) * (c - mean);
  return {mean, std::sqrt(sq / static_cast<double>(n)), n};
}

// Ascending-order mean restricted to [front, back].
double block_mean(std::span<const double> sorted) {
  if (sorted.front() == sorted.back()) return sorted.front();
  double sum = 0.0;
  for (double c : sorted) sum += c;
  return std::clamp(sum / static_cast<double>(sorted.size()), sorted.front(), sorted.back());
}

void check_inputs(std::size_t count, int levels) {
  if (count == 0) throw InvalidArgument("cannot threshold an empty coefficient set");
  if (!valid_level_count(levels)) {
    throw InvalidArgument("levels must be in {3,5,7}, got " + std::to_string(levels));
  }
}

std::vector<double> sorted_copy(std::span<const double> coeffs) {
  std::vector<double> s(coeffs.begin(), coeffs.end());
  std::sort(s.begin(), s.end());
  return s;
}

// Members of `sorted` below `cut`, and at or above it.
std::span<const double> below(std::span<const double> sorted, double cut) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), cut);
  return sorted.first(static_cast<std::size_t>(it - sorted.begin()));
}
std::span<const double> at_or_above(std::span<const double> sorted, double cut) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), cut);
  return sorted.subspan(static_cast<std::size_t>(it - sorted.begin()));
}

std::vector<double> sorted_cuts(std::span<const double> sorted, int levels) {
  const CoeffStats all = sorted_stats(sorted);
  if (all.std == 0.0) return {};

  const double lower_edge = all.mean - all.std;
  const double upper_edge = all.mean + all.std;
  std::vector<double> cuts{lower_edge};
  if (upper_edge > lower_edge) cuts.push_back(upper_edge);

  if (levels >= 5) {
    // Lower tail (-inf, lower_edge): split at its mean, then its outer piece.
    if (const auto tail = below(sorted, lower_edge); !tail.empty()) {
      const CoeffStats t = sorted_stats(tail);
      double inner = lower_edge;
      if (t.mean < lower_edge) {
        cuts.push_back(t.mean);
        inner = t.mean;
      }
      if (levels >= 7 && t.std > 0.0 && t.mean - t.std < inner) {
        cuts.push_back(t.mean - t.std);
      }
    }
    // Upper tail [upper_edge, inf), mirrored.
    if (const auto tail = at_or_above(sorted, upper_edge); !tail.empty()) {
      const CoeffStats t = sorted_stats(tail);
      double inner = upper_edge;
      if (t.mean > upper_edge) {
        cuts.push_back(t.mean);
        inner = t.mean;
      }
      if (levels >= 7 && t.std > 0.0 && t.mean + t.std > inner) {
        cuts.push_back(t.mean + t.std);
      }
    }
  }

  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

}  // namespace

bool valid_level_count(int levels) { return levels == 3 || levels == 5 || levels == 7; }

CoeffStats coeff_stats(std::span<const double> coeffs) {
  if (coeffs.empty()) throw InvalidArgument("coeff_stats: empty input");
  const auto sorted = sorted_copy(coeffs);
  return sorted_stats(sorted);
}

std::size_t BlockPartition::block_of(double value) const {
  return static_cast<std::size_t>(
      std::upper_bound(boundaries.begin(), boundaries.end(), value) - boundaries.begin());
}

std::vector<double> candidate_boundaries(std::span<const double> coeffs, int levels) {
  check_inputs(coeffs.size(), levels);
  const auto sorted = sorted_copy(coeffs);
  return sorted_cuts(sorted, levels);
}

BlockPartition build_partition(std::span<const double> coeffs, int levels) {
  check_inputs(coeffs.size(), levels);
  const auto sorted = sorted_copy(coeffs);
  const std::span<const double> all(sorted);
  const auto cuts = sorted_cuts(all, levels);

  // Block i holds [cuts[i-1], cuts[i]); as ranges of the sorted array.
  std::vector<std::size_t> starts{0};
  for (double cut : cuts) starts.push_back(all.size() - at_or_above(all, cut).size());
  starts.push_back(all.size());

  BlockPartition p;
  p.levels_requested = levels;
  std::optional<std::size_t> previous;
  for (std::size_t i = 0; i + 1 < starts.size(); ++i) {
    const auto members = all.subspan(starts[i], starts[i + 1] - starts[i]);
    if (members.empty()) continue;
    // Between two nonempty blocks keep only the upper edge of the lower one.
    if (previous) p.boundaries.push_back(cuts[*previous]);
    p.representatives.push_back(block_mean(members));
    previous = i;
  }
  return p;
}

std::vector<double> apply_partition(std::span<const double> coeffs, const BlockPartition& p) {
  std::vector<double> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out[i] = p.representatives[p.block_of(coeffs[i])];
  }
  return out;
}

Matrix apply_partition(const Matrix& coeffs, const BlockPartition& p) {
  Matrix out(coeffs.rows(), coeffs.cols());
  auto src = coeffs.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = p.representatives[p.block_of(src[i])];
  return out;
}

Matrix threshold_subband(const Matrix& mat, int levels) {
  if (mat.empty()) throw InvalidArgument("threshold_subband: empty matrix");
  return apply_partition(mat, build_partition(mat.values(), levels));
}

}  // namespace wavseg
