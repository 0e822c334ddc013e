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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "wavseg/error.hpp"

namespace wavseg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<MetricsRecord> grid(const std::string& id, const std::vector<WaveletName>& wavelets,
                                const std::vector<int>& levels) {
  std::vector<MetricsRecord> out;
  double psnr = 30.0;
  for (const auto& w : wavelets) {
    for (int l : levels) out.push_back({id, w, l, psnr += 0.125, 1000 + out.size()});
  }
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Report, SingleRow) {
  const std::vector<MetricsRecord> records = {
      {"lenna", parse_wavelet("db2"), 3, 34.45, 37069}};
  EXPECT_EQ(format_report(records),
            "image,wavelet,levels,psnr_db,size_bytes\nlenna,db2,3,34.45,37069\n");
}

TEST(Report, InfinitySentinel) {
  const std::vector<MetricsRecord> records = {{"x", parse_wavelet("coif1"), 7, kInf, 12}};
  EXPECT_EQ(format_report(records),
            "image,wavelet,levels,psnr_db,size_bytes\nx,coif1,7,inf,12\n");
}

TEST(Report, TwoDecimalRounding) {
  EXPECT_EQ(format_psnr(36.41499), "36.41");
  EXPECT_EQ(format_psnr(36.416), "36.42");
  EXPECT_EQ(format_psnr(0.0), "0.00");
}

TEST(Report, LineCount) {
  const auto records = grid("img", all_wavelets(), {3, 5, 7});
  const auto csv = format_report(records);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 28);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Report, ParseRecoversRecords) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> db(20.0, 50.0);
  auto records = grid("baboon", all_wavelets(), {3, 5, 7});
  for (auto& r : records) r.psnr_db = std::round(db(rng) * 100.0) / 100.0;
  records[4].psnr_db = kInf;
  EXPECT_EQ(parse_report(format_report(records)), records);
  EXPECT_THROW(parse_report("wrong,header\n"), InvalidArgument);
  EXPECT_THROW(parse_report("image,wavelet,levels,psnr_db,size_bytes\na,db2,3\n"),
               InvalidArgument);
}

TEST(Report, WriteFileAndErrors) {
  const auto path = std::filesystem::temp_directory_path() / "wavseg_report_test.csv";
  const auto records = grid("a", {parse_wavelet("db4")}, {3});
  write_report(records, path);
  EXPECT_EQ(slurp(path), format_report(records));
  std::filesystem::remove(path);
  EXPECT_THROW(write_report({}, path), InvalidArgument);
  try {
    write_report(records, "/nonexistent-dir/r.csv");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/r.csv"), std::string::npos);
  }
}

TEST(PlotData, FullGrid) {
  const auto records = grid("lenna", all_wavelets(), {3, 5, 7});
  const auto text = format_plot_data(records);
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "levels db2 db4 db6 db8 coif1 coif2 coif3 coif4 coif5");
  EXPECT_EQ(lines[1].substr(0, 8), "3 30.12 ");
  EXPECT_EQ(lines[3].substr(0, 2), "7 ");
  // Column j of row l is the record for (wavelet j, level l).
  std::istringstream row(lines[2]);
  std::string cell;
  row >> cell;
  EXPECT_EQ(cell, "5");
  for (std::size_t j = 0; j < 9; ++j) {
    row >> cell;
    EXPECT_EQ(cell, format_psnr(records[3 * j + 1].psnr_db));
  }
}

TEST(PlotData, MissingCombinationNamed) {
  auto records = grid("lenna", all_wavelets(), {3, 5, 7});
  records.erase(records.begin() + 5 * 3 + 1);  // coif2 at L=5
  try {
    format_plot_data(records);
    FAIL() << "expected InvalidArgument";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("coif2/5"), std::string::npos) << e.what();
  }
}

TEST(PlotData, SingleWaveletHasTwoColumns) {
  const auto text = format_plot_data(grid("x", {parse_wavelet("coif3")}, {3, 5, 7}));
  EXPECT_EQ(text, "levels coif3\n3 30.12\n5 30.25\n7 30.38\n");
}

TEST(PlotData, RejectsMixedImages) {
  auto records = grid("a", {parse_wavelet("db2")}, {3});
  records.push_back(grid("b", {parse_wavelet("db2")}, {5}).front());
  EXPECT_THROW(format_plot_data(records), InvalidArgument);
}

}  // namespace
}  // namespace wavseg
