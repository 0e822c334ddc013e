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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wavseg/error.hpp"
#include "wavseg/filterbank.hpp"

namespace wavseg::cli {

// Bad command line. what() carries the problem followed by the synopsis.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Set by parse_args when --help was given; what() is the help text.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

struct CliConfig {
  std::vector<std::filesystem::path> inputs;
  std::vector<WaveletName> wavelets;
  std::vector<int> levels;
  int depth = 1;
  std::filesystem::path report_path = "report.csv";
  std::optional<std::filesystem::path> plot_path;
  std::optional<std::filesystem::path> emit_images;
  unsigned threads = 0;  // 0: hardware concurrency
};

// argv excludes the program name.
CliConfig parse_args(const std::vector<std::string>& argv);

// Plot file for one image when several inputs share one --plot path.
std::filesystem::path plot_path_for(const std::filesystem::path& base,
                                    const std::string& image_id, std::size_t input_count);

// Runs the whole experiment and writes every output. Returns the process
// exit code: 0 on success, 1 on a runtime failure (diagnostic on `err`).
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// parse_args + run with exit code 2 for usage errors.
int main(int argc, char** argv);

}  // namespace wavseg::cli
