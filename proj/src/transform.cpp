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

#include "wavseg/transform.hpp"

#include <string>

#include "wavseg/error.hpp"

namespace wavseg {

namespace {

// Writes the analysis of `signal` into approx/detail (each signal.size()/2).
void analyze(std::span<const double> signal, std::span<const double> lo,
             std::span<const double> hi, std::span<double> approx, std::span<double> detail) {
  const std::size_t n = signal.size();
  const std::size_t taps = lo.size();
  for (std::size_t k = 0; k < n / 2; ++k) {
    double a = 0.0;
    double d = 0.0;
    std::size_t idx = (2 * k) % n;
    for (std::size_t t = 0; t < taps; ++t) {
      a += lo[t] * signal[idx];
      d += hi[t] * signal[idx];
      if (++idx == n) idx = 0;
    }
    approx[k] = a;
    detail[k] = d;
  }
}

// Gather form of the adjoint: x[j] = sum over taps with 2k + n == j (mod N).
// syn_lo/syn_hi are the reversed analysis filters, so analysis tap n is
// synthesis tap L-1-n.
void synthesize(std::span<const double> approx, std::span<const double> detail,
                std::span<const double> syn_lo, std::span<const double> syn_hi,
                std::span<double> out) {
  const std::size_t half = approx.size();
  const std::size_t n = 2 * half;
  const std::size_t taps = syn_lo.size();
  for (std::size_t j = 0; j < n; ++j) {
    double x = 0.0;
    for (std::size_t m = 0; m < taps; ++m) {
      const std::size_t tap = taps - 1 - m;
      if ((tap & 1U) != (j & 1U)) continue;
      // t = (j - tap) mod n, always even here.
      const std::size_t t = (j + n - tap % n) % n;
      const std::size_t k = t / 2;
      x += syn_lo[m] * approx[k] + syn_hi[m] * detail[k];
    }
    out[j] = x;
  }
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// One 2D analysis level: rows first, then columns of both halves.
void analyze_level(const Matrix& in, const FilterBank& fb, Matrix& approx, SubbandTriple& out) {
  const std::size_t rows = in.rows();
  const std::size_t cols = in.cols();
  Matrix row_lo(rows, cols / 2);
  Matrix row_hi(rows, cols / 2);
  for (std::size_t r = 0; r < rows; ++r) {
    analyze(in.row(r), fb.lowpass, fb.highpass, row_lo.row(r), row_hi.row(r));
  }

  approx = Matrix(rows / 2, cols / 2);
  out.h = Matrix(rows / 2, cols / 2);
  out.v = Matrix(rows / 2, cols / 2);
  out.d = Matrix(rows / 2, cols / 2);
  std::vector<double> column(rows);
  std::vector<double> lo(rows / 2);
  std::vector<double> hi(rows / 2);
  auto column_pass = [&](const Matrix& src, Matrix& dst_lo, Matrix& dst_hi) {
    for (std::size_t c = 0; c < src.cols(); ++c) {
      for (std::size_t r = 0; r < rows; ++r) column[r] = src(r, c);
      analyze(column, fb.lowpass, fb.highpass, lo, hi);
      for (std::size_t r = 0; r < rows / 2; ++r) {
        dst_lo(r, c) = lo[r];
        dst_hi(r, c) = hi[r];
      }
    }
  };
  column_pass(row_lo, approx, out.h);
  column_pass(row_hi, out.v, out.d);
}

Matrix synthesize_level(const Matrix& approx, const SubbandTriple& details,
                        const SynthesisFilters& syn) {
  const std::size_t half_rows = approx.rows();
  const std::size_t half_cols = approx.cols();
  const std::size_t rows = 2 * half_rows;
  const std::size_t cols = 2 * half_cols;

  Matrix row_lo(rows, half_cols);
  Matrix row_hi(rows, half_cols);
  std::vector<double> lo(half_rows);
  std::vector<double> hi(half_rows);
  std::vector<double> column(rows);
  auto column_pass = [&](const Matrix& src_lo, const Matrix& src_hi, Matrix& dst) {
    for (std::size_t c = 0; c < half_cols; ++c) {
      for (std::size_t r = 0; r < half_rows; ++r) {
        lo[r] = src_lo(r, c);
        hi[r] = src_hi(r, c);
      }
      synthesize(lo, hi, syn.lowpass, syn.highpass, column);
      for (std::size_t r = 0; r < rows; ++r) dst(r, c) = column[r];
    }
  };
  column_pass(approx, details.h, row_lo);
  column_pass(details.v, details.d, row_hi);

  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    synthesize(row_lo.row(r), row_hi.row(r), syn.lowpass, syn.highpass, out.row(r));
  }
  return out;
}

}  // namespace

Subbands1d dwt1d(std::span<const double> signal, const FilterBank& fb) {
  if (signal.empty() || signal.size() % 2 != 0) {
    throw InvalidArgument("dwt1d needs an even, nonzero signal length, got " +
                          std::to_string(signal.size()));
  }
  Subbands1d out{std::vector<double>(signal.size() / 2), std::vector<double>(signal.size() / 2)};
  analyze(signal, fb.lowpass, fb.highpass, out.approx, out.detail);
  return out;
}

std::vector<double> idwt1d(std::span<const double> approx, std::span<const double> detail,
                           const FilterBank& fb) {
  if (approx.size() != detail.size()) {
    throw DimensionError("idwt1d: approx has " + std::to_string(approx.size()) +
                         " coefficients but detail has " + std::to_string(detail.size()));
  }
  if (approx.empty()) throw DimensionError("idwt1d: empty input");
  const auto syn = synthesis_pair(fb);
  std::vector<double> out(2 * approx.size());
  synthesize(approx, detail, syn.lowpass, syn.highpass, out);
  return out;
}

Decomposition dwt2d(const Matrix& plane, const FilterBank& fb, int depth) {
  if (depth < 1) throw InvalidArgument("depth must be >= 1, got " + std::to_string(depth));
  if (depth >= 32) throw InvalidArgument("depth " + std::to_string(depth) + " is too large");
  const std::size_t block = std::size_t{1} << depth;
  if (plane.empty() || plane.rows() % block != 0 || plane.cols() % block != 0) {
    throw DimensionError("plane of " + shape(plane) + " (rows x cols) cannot be decomposed to depth " +
                         std::to_string(depth) + ": width and height must be divisible by " +
                         std::to_string(block));
  }

  Decomposition dec;
  dec.source_width = plane.cols();
  dec.source_height = plane.rows();
  dec.levels.resize(static_cast<std::size_t>(depth));
  Matrix current = plane;
  for (auto& level : dec.levels) {
    Matrix next;
    analyze_level(current, fb, next, level);
    current = std::move(next);
  }
  dec.approx = std::move(current);
  return dec;
}

Matrix idwt2d(const Decomposition& dec, const FilterBank& fb) {
  if (dec.levels.empty()) throw DimensionError("idwt2d: decomposition has no levels");
  for (std::size_t i = 0; i < dec.levels.size(); ++i) {
    const std::size_t scale = std::size_t{2} << i;
    const std::size_t rows = dec.source_height / scale;
    const std::size_t cols = dec.source_width / scale;
    const auto& lv = dec.levels[i];
    for (const Matrix* m : {&lv.h, &lv.v, &lv.d}) {
      if (m->rows() != rows || m->cols() != cols || rows * scale != dec.source_height ||
          cols * scale != dec.source_width || rows == 0 || cols == 0) {
        throw DimensionError("idwt2d: level " + std::to_string(i) + " sub-band is " + shape(*m) +
                             ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
      }
    }
  }
  const auto& deepest = dec.levels.back().h;
  if (!dec.approx.same_shape(deepest)) {
    throw DimensionError("idwt2d: approximation is " + shape(dec.approx) + ", expected " +
                         shape(deepest));
  }

  const auto syn = synthesis_pair(fb);
  Matrix current = dec.approx;
  for (std::size_t i = dec.levels.size(); i-- > 0;) {
    current = synthesize_level(current, dec.levels[i], syn);
  }
  return current;
}

double energy(const Decomposition& dec) {
  auto sum_sq = [](const Matrix& m) {
    double s = 0.0;
    for (double v : m.values()) s += v * v;
    return s;
  };
  double total = sum_sq(dec.approx);
  for (const auto& lv : dec.levels) total += sum_sq(lv.h) + sum_sq(lv.v) + sum_sq(lv.d);
  return total;
}

}  // namespace wavseg
