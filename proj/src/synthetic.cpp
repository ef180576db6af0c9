// Copyright 2026 The omcmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "omc/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace omc {

namespace {

// std::uniform_real_distribution is implementation defined; take the top 53
// bits of the engine output instead.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

TimeHeightSeries synthetic_day(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TimeHeightSeries s;
  s.metadata = {"synthetic", "ice_water_content", "kg m-3"};
  s.time.reserve(n);
  s.height.reserve(n);
  s.value.reserve(n);
  s.mask.assign(n, MaskReason::Valid);

  constexpr double pi = std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 24.0 * unit(rng);
    const double h = 12.0 * unit(rng);
    const double noise = unit(rng) - 0.5;
    // Ice is densest in a band that sinks through the day.
    const double layer = 8.0 - 3.0 * t / 24.0;
    const double core = std::exp(-std::pow((h - layer) / 2.5, 2.0));
    const double wave = 0.08 * std::sin(2.0 * pi * t / 6.0);
    const double g = std::clamp(0.02 + 0.9 * core + wave + 0.12 * noise, 0.0, 0.9999);
    s.time.push_back(t);
    s.height.push_back(h);
    s.value.push_back(std::pow(10.0, -8.0 + 7.0 * g));
  }
  return s;
}

}  // namespace omc
