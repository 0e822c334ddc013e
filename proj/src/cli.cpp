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

#include "wavseg/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <memory>

#include "wavseg/image.hpp"
#include "wavseg/pipeline.hpp"
#include "wavseg/quantizer.hpp"
#include "wavseg/report.hpp"

namespace wavseg::cli {

namespace {

struct RawArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> wavelets;
  std::vector<std::string> levels;
  int depth = 1;
  std::string report = "report.csv";
  std::string plot;
  std::string emit_images;
  unsigned threads = 0;
};

std::unique_ptr<CLI::App> make_app(RawArgs& raw) {
  auto app = std::make_unique<CLI::App>(
      "Wavelet-domain multilevel thresholding benchmark: PSNR and size per wavelet and "
      "threshold level.",
      "wavseg_bench");
  app->add_option("inputs", raw.inputs, "Input images (binary PPM/PGM, maxval 255)")
      ->required();
  app->add_option("--wavelets", raw.wavelets,
                  "Comma-separated wavelets (default: " + supported_wavelet_list() + ")")
      ->delimiter(',');
  app->add_option("--levels", raw.levels, "Comma-separated threshold level counts from {3,5,7}")
      ->delimiter(',');
  app->add_option("--depth", raw.depth, "Wavelet decomposition depth (default 1)");
  app->add_option("--report", raw.report, "CSV report path (default report.csv)");
  app->add_option("--plot", raw.plot, "Plot data path (PSNR per level, one column per wavelet)");
  app->add_option("--emit-images", raw.emit_images,
                  "Directory for reconstructed images <stem>_<wavelet>_L<levels>.ppm");
  app->add_option("--threads", raw.threads, "Worker threads (default: hardware concurrency)");
  return app;
}

std::string synopsis() {
  RawArgs raw;
  return make_app(raw)->help();
}

[[noreturn]] void usage(const std::string& problem) {
  throw UsageError(problem + "\n\n" + synopsis());
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& argv) {
  RawArgs raw;
  auto app = make_app(raw);
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app->parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app->help());
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }

  CliConfig cfg;
  for (const auto& in : raw.inputs) cfg.inputs.emplace_back(in);

  if (raw.wavelets.empty()) {
    cfg.wavelets = all_wavelets();
  } else {
    std::string bad;
    for (const auto& w : raw.wavelets) {
      try {
        cfg.wavelets.push_back(parse_wavelet(w));
      } catch (const InvalidArgument&) {
        bad += (bad.empty() ? "" : ", ") + w;
      }
    }
    if (!bad.empty()) {
      usage("unsupported wavelet(s): " + bad + "; supported: " + supported_wavelet_list());
    }
  }

  if (raw.levels.empty()) {
    cfg.levels = {3, 5, 7};
  } else {
    std::string bad;
    for (const auto& l : raw.levels) {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(l.data(), l.data() + l.size(), value);
      if (ec != std::errc() || ptr != l.data() + l.size() || !valid_level_count(value)) {
        bad += (bad.empty() ? "" : ", ") + l;
      } else {
        cfg.levels.push_back(value);
      }
    }
    if (!bad.empty()) usage("levels must be in {3,5,7} (got " + bad + ")");
  }

  if (raw.depth < 1) usage("depth must be >= 1");
  cfg.depth = raw.depth;
  cfg.report_path = raw.report;
  if (!raw.plot.empty()) cfg.plot_path = raw.plot;
  if (!raw.emit_images.empty()) cfg.emit_images = raw.emit_images;
  cfg.threads = raw.threads;
  return cfg;
}

std::filesystem::path plot_path_for(const std::filesystem::path& base,
                                    const std::string& image_id, std::size_t input_count) {
  if (input_count <= 1) return base;
  std::filesystem::path out = base;
  out.replace_filename(base.stem().string() + "_" + image_id + base.extension().string());
  return out;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    struct ImageResult {
      std::string id;
      std::vector<MetricsRecord> records;
    };
    std::vector<ImageResult> results;
    for (const auto& path : cfg.inputs) {
      const RgbImage img = read_image_file(path);
      const std::string id = path.stem().string();
      auto records = run_experiment(img, id, cfg.wavelets, cfg.levels, cfg.depth,
                                    ExperimentOptions{cfg.threads});
      if (cfg.emit_images) {
        std::filesystem::create_directories(*cfg.emit_images);
        for (const auto& w : cfg.wavelets) {
          for (int levels : cfg.levels) {
            const auto recon = process_image(img, {w, cfg.depth, levels});
            write_image_file(recon, *cfg.emit_images / (id + "_" + w.str() + "_L" +
                                                        std::to_string(levels) + ".ppm"));
          }
        }
      }
      out << id << ": " << records.size() << " combinations\n";
      results.push_back({id, std::move(records)});
    }

    std::vector<MetricsRecord> all;
    for (const auto& r : results) all.insert(all.end(), r.records.begin(), r.records.end());
    write_report(all, cfg.report_path);
    if (cfg.plot_path) {
      for (const auto& r : results) {
        write_plot_data(r.records, plot_path_for(*cfg.plot_path, r.id, results.size()));
      }
    }
    return 0;
  } catch (const std::exception& e) {
    err << "wavseg_bench: " << e.what() << "\n";
    return 1;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  CliConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "wavseg_bench: " << e.what();
    return 2;
  }
  return run(cfg, std::cout, std::cerr);
}

}  // namespace wavseg::cli
