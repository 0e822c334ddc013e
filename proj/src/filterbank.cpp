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

#include "wavseg/filterbank.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "filter_tables.hpp"
#include "wavseg/error.hpp"

namespace wavseg {

std::string WaveletName::str() const {
  return (family == WaveletFamily::Daubechies ? "db" : "coif") + std::to_string(order);
}

const std::vector<WaveletName>& all_wavelets() {
  static const std::vector<WaveletName> names = {
      {WaveletFamily::Daubechies, 2}, {WaveletFamily::Daubechies, 4},
      {WaveletFamily::Daubechies, 6}, {WaveletFamily::Daubechies, 8},
      {WaveletFamily::Coiflet, 1},    {WaveletFamily::Coiflet, 2},
      {WaveletFamily::Coiflet, 3},    {WaveletFamily::Coiflet, 4},
      {WaveletFamily::Coiflet, 5},
  };
  return names;
}

std::string supported_wavelet_list() {
  std::string out;
  for (const auto& w : all_wavelets()) {
    if (!out.empty()) out += ",";
    out += w.str();
  }
  return out;
}

WaveletName parse_wavelet(std::string_view text) {
  for (const auto& w : all_wavelets()) {
    if (w.str() == text) return w;
  }
  throw InvalidArgument("unsupported wavelet '" + std::string(text) +
                        "'; supported: " + supported_wavelet_list());
}

std::vector<double> qmf_highpass(std::span<const double> lowpass) {
  const std::size_t len = lowpass.size();
  if (len == 0 || len % 2 != 0) {
    throw InvalidArgument("qmf_highpass needs an even, nonzero filter length, got " +
                          std::to_string(len));
  }
  std::vector<double> g(len);
  for (std::size_t n = 0; n < len; ++n) {
    const double tap = lowpass[len - 1 - n];
    g[n] = (n % 2 == 0) ? tap : -tap;
  }
  return g;
}

SynthesisFilters synthesis_pair(const FilterBank& fb) {
  return {std::vector<double>(fb.lowpass.rbegin(), fb.lowpass.rend()),
          std::vector<double>(fb.highpass.rbegin(), fb.highpass.rend())};
}

namespace {

template <std::size_t N>
FilterBank make_bank(WaveletName name, const std::array<double, N>& taps) {
  FilterBank fb;
  fb.name = name;
  fb.lowpass.assign(taps.begin(), taps.end());
  fb.highpass = qmf_highpass(fb.lowpass);
  const bool daubechies = name.family == WaveletFamily::Daubechies;
  fb.vanishing_moments = daubechies ? name.order : 2 * name.order;
  const std::size_t expected = daubechies ? 2 * name.order : 6 * name.order;
  if (fb.length() != expected) {
    throw std::logic_error(name.str() + " table has " + std::to_string(fb.length()) +
                           " taps, expected " + std::to_string(expected));
  }
  return fb;
}

const std::map<WaveletName, FilterBank>& registry() {
  using detail::kCoif1Lowpass, detail::kCoif2Lowpass, detail::kCoif3Lowpass,
      detail::kCoif4Lowpass, detail::kCoif5Lowpass, detail::kDb2Lowpass,
      detail::kDb4Lowpass, detail::kDb6Lowpass, detail::kDb8Lowpass;
  static const std::map<WaveletName, FilterBank> banks = [] {
    std::map<WaveletName, FilterBank> m;
    auto add = [&m](WaveletName n, const auto& taps) { m.emplace(n, make_bank(n, taps)); };
    constexpr auto db = WaveletFamily::Daubechies;
    constexpr auto coif = WaveletFamily::Coiflet;
    add({db, 2}, kDb2Lowpass);
    add({db, 4}, kDb4Lowpass);
    add({db, 6}, kDb6Lowpass);
    add({db, 8}, kDb8Lowpass);
    add({coif, 1}, kCoif1Lowpass);
    add({coif, 2}, kCoif2Lowpass);
    add({coif, 3}, kCoif3Lowpass);
    add({coif, 4}, kCoif4Lowpass);
    add({coif, 5}, kCoif5Lowpass);
    return m;
  }();
  return banks;
}

}  // namespace

const FilterBank& get_filter(WaveletName name) {
  const auto& banks = registry();
  auto it = banks.find(name);
  if (it == banks.end()) {
    throw InvalidArgument("unsupported wavelet '" + name.str() +
                          "'; supported: " + supported_wavelet_list());
  }
  return it->second;
}

const FilterBank& get_filter(std::string_view name) { return get_filter(parse_wavelet(name)); }

}  // namespace wavseg
