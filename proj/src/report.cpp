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

#include "wavseg/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>

#include "wavseg/error.hpp"

namespace wavseg {

namespace {

constexpr std::string_view kHeader = "image,wavelet,levels,psnr_db,size_bytes";

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    fields.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

}  // namespace

std::string format_psnr(double psnr_db) {
  if (std::isinf(psnr_db) && psnr_db > 0) return "inf";
  return fmt::format("{:.2f}", psnr_db);
}

std::string format_report(const std::vector<MetricsRecord>& records) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{},{}\n", r.image_id, r.wavelet.str(), r.levels,
                       format_psnr(r.psnr_db), r.size_bytes);
  }
  return out;
}

std::vector<MetricsRecord> parse_report(std::string_view csv) {
  std::vector<MetricsRecord> records;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    const std::string_view line = csv.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kHeader) throw InvalidArgument("report: unexpected header '" + std::string(line) + "'");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 5) {
      throw InvalidArgument("report line " + std::to_string(line_no) + ": expected 5 fields");
    }
    MetricsRecord r;
    r.image_id = f[0];
    r.wavelet = parse_wavelet(f[1]);
    try {
      r.levels = std::stoi(f[2]);
      r.psnr_db = f[3] == "inf" ? std::numeric_limits<double>::infinity() : std::stod(f[3]);
      r.size_bytes = std::stoull(f[4]);
    } catch (const std::logic_error&) {
      throw InvalidArgument("report line " + std::to_string(line_no) + ": bad numeric field");
    }
    records.push_back(std::move(r));
  }
  if (line_no == 0) throw InvalidArgument("report: empty input");
  return records;
}

std::string format_plot_data(const std::vector<MetricsRecord>& records) {
  if (records.empty()) throw InvalidArgument("plot data: no records");

  // First-seen order for both axes.
  std::vector<WaveletName> wavelets;
  std::vector<int> levels;
  std::map<std::pair<WaveletName, int>, double> cells;
  for (const auto& r : records) {
    if (r.image_id != records.front().image_id) {
      throw InvalidArgument("plot data: records mix images '" + records.front().image_id +
                            "' and '" + r.image_id + "'");
    }
    if (std::find(wavelets.begin(), wavelets.end(), r.wavelet) == wavelets.end()) {
      wavelets.push_back(r.wavelet);
    }
    if (std::find(levels.begin(), levels.end(), r.levels) == levels.end()) {
      levels.push_back(r.levels);
    }
    cells[{r.wavelet, r.levels}] = r.psnr_db;
  }
  std::sort(levels.begin(), levels.end());

  std::string missing;
  for (const auto& w : wavelets) {
    for (int l : levels) {
      if (!cells.contains({w, l})) {
        if (!missing.empty()) missing += ", ";
        missing += w.str() + "/" + std::to_string(l);
      }
    }
  }
  if (!missing.empty()) throw InvalidArgument("plot data: incomplete grid, missing " + missing);

  std::string out = "levels";
  for (const auto& w : wavelets) out += " " + w.str();
  out += '\n';
  for (int l : levels) {
    out += std::to_string(l);
    for (const auto& w : wavelets) out += " " + format_psnr(cells.at({w, l}));
    out += '\n';
  }
  return out;
}

void write_report(const std::vector<MetricsRecord>& records, const std::filesystem::path& path) {
  if (records.empty()) throw InvalidArgument("report: no records");
  write_text(format_report(records), path);
}

void write_plot_data(const std::vector<MetricsRecord>& records,
                     const std::filesystem::path& path) {
  write_text(format_plot_data(records), path);
}

}  // namespace wavseg
