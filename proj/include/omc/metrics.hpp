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

#pragma once

#include <string>
#include <vector>

#include "omc/colormap.hpp"
#include "omc/scinum.hpp"

namespace omc {

/// A reading answer "the value lies between low and high".
struct RangeAnswer {
  ScientificValue low;
  ScientificValue high;
};

/// Width of an answered range in decades, counting ten mantissa units per
/// decade: ((Exp_high - Exp_low) * 10 + (Mant_high - Mant_low)) / 10.
double range_size(const RangeAnswer& answer);

struct ProfileSeries {
  std::vector<double> positions;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

/// Color difference between consecutive stops, placed at step midpoints.
ProfileSeries delta_e_profile(const ColormapTable& table, DeltaEMetric metric = DeltaEMetric::CIE76);

struct HsvProfile {
  ProfileSeries hue;  ///< degrees, unwrapped across consecutive stops
  ProfileSeries saturation;
  ProfileSeries value;
};

HsvProfile hsv_profile(const ColormapTable& table);

struct BoundaryEntry {
  int index = 0;  ///< boundary between band `index` and band `index + 1`
  double delta_e = 0.0;
};

std::vector<BoundaryEntry> boundary_report(const OmcColormap& cmap, DeltaEMetric metric = DeltaEMetric::CIE76);

struct BandMonotonicity {
  int exponent = 0;
  bool monotone = false;  ///< L* strictly monotone over the 64 samples
  double min_step = 0.0;  ///< smallest |delta L*| between neighbouring samples
  Direction direction = Direction::Ascending;
};

inline constexpr int kMonotonicitySamples = 64;

std::vector<BandMonotonicity> monotonicity_check(const OmcColormap& cmap);

/// Two-column "position,value" CSV with a header line.
std::string to_csv(const ProfileSeries& series, const std::string& value_name = "value");

}  // namespace omc
