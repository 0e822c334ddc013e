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

#include <array>

namespace wavseg::detail {

extern const std::array<double, 4> kDb2Lowpass;
extern const std::array<double, 8> kDb4Lowpass;
extern const std::array<double, 12> kDb6Lowpass;
extern const std::array<double, 16> kDb8Lowpass;
extern const std::array<double, 6> kCoif1Lowpass;
extern const std::array<double, 12> kCoif2Lowpass;
extern const std::array<double, 18> kCoif3Lowpass;
extern const std::array<double, 24> kCoif4Lowpass;
extern const std::array<double, 30> kCoif5Lowpass;

}  // namespace wavseg::detail
