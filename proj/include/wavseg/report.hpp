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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wavseg/pipeline.hpp"

namespace wavseg {

// Two decimals, or "inf" for the identical-image sentinel.
std::string format_psnr(double psnr_db);

// CSV with header "image,wavelet,levels,psnr_db,size_bytes", LF endings.
std::string format_report(const std::vector<MetricsRecord>& records);
std::vector<MetricsRecord> parse_report(std::string_view csv);

// Plot table for one image: a header "levels <wavelet>...", then one row per
// level count holding the PSNR of each wavelet. Columns are separated by a
// single space. Throws InvalidArgument naming every missing "wavelet/L" cell.
std::string format_plot_data(const std::vector<MetricsRecord>& records);

// File variants; throw IoError with the path on failure. Records must be
// nonempty.
void write_report(const std::vector<MetricsRecord>& records, const std::filesystem::path& path);
void write_plot_data(const std::vector<MetricsRecord>& records,
                     const std::filesystem::path& path);

}  // namespace wavseg
