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

#include "omc/metrics.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace omc {

double range_size(const RangeAnswer& answer) {
  if (compose(answer.low) > compose(answer.high)) {
    throw Error(ErrorCode::InvalidRange, "range low end exceeds high end");
  }
  const double exponents = static_cast<double>(answer.high.exponent - answer.low.exponent);
  const double mantissas = answer.high.mantissa - answer.low.mantissa;
  return (exponents * 10.0 + mantissas) / 10.0;
}

ProfileSeries delta_e_profile(const ColormapTable& table, DeltaEMetric metric) {
  validate(table);
  const std::size_t steps = table.stops.size() - 1;
  ProfileSeries out;
  out.positions.reserve(steps);
  out.values.reserve(steps);
  Lab prev = srgb_to_lab(table.stops.front());
  for (std::size_t i = 0; i < steps; ++i) {
    const Lab next = srgb_to_lab(table.stops[i + 1]);
    out.positions.push_back((static_cast<double>(i) + 0.5) / static_cast<double>(steps));
    out.values.push_back(delta_e(prev, next, metric));
    prev = next;
  }
  return out;
}

HsvProfile hsv_profile(const ColormapTable& table) {
  validate(table);
  const std::size_t n = table.stops.size();
  HsvProfile out;
  double prev_hue = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Hsv hsv = srgb_to_hsv(table.stops[i]);
    const double pos = static_cast<double>(i) / static_cast<double>(n - 1);
    double h = hsv.h();
    if (i > 0) h = prev_hue + std::remainder(h - prev_hue, 360.0);
    prev_hue = h;
    out.hue.positions.push_back(pos);
    out.hue.values.push_back(h);
    out.saturation.positions.push_back(pos);
    out.saturation.values.push_back(hsv.s());
    out.value.positions.push_back(pos);
    out.value.values.push_back(hsv.v());
  }
  return out;
}

std::vector<BoundaryEntry> boundary_report(const OmcColormap& cmap, DeltaEMetric metric) {
  std::vector<BoundaryEntry> out;
  const auto& bands = cmap.bands();
  for (std::size_t k = 0; k + 1 < bands.size(); ++k) {
    out.push_back({static_cast<int>(k), delta_e(bands[k].color_at(1.0), bands[k + 1].color_at(0.0), metric)});
  }
  return out;
}

std::vector<BandMonotonicity> monotonicity_check(const OmcColormap& cmap) {
  std::vector<BandMonotonicity> out;
  for (const ExponentBand& band : cmap.bands()) {
    std::vector<double> lightness;
    lightness.reserve(kMonotonicitySamples);
    for (int i = 0; i < kMonotonicitySamples; ++i) {
      const double t = static_cast<double>(i) / (kMonotonicitySamples - 1);
      lightness.push_back(srgb_to_lab(lab_to_srgb(band.color_at(t)).value).L());
    }
    BandMonotonicity report;
    report.exponent = band.exponent;
    report.min_step = std::abs(lightness[1] - lightness[0]);
    bool rising = true;
    bool falling = true;
    for (std::size_t i = 1; i < lightness.size(); ++i) {
      const double step = lightness[i] - lightness[i - 1];
      rising = rising && step > 0.0;
      falling = falling && step < 0.0;
      report.min_step = std::min(report.min_step, std::abs(step));
    }
    report.monotone = rising || falling;
    report.direction = lightness.back() >= lightness.front() ? Direction::Ascending : Direction::Descending;
    out.push_back(report);
  }
  return out;
}

std::string to_csv(const ProfileSeries& series, const std::string& value_name) {
  std::ostringstream os;
  os << "position," << value_name << '\n' << std::setprecision(10);
  for (std::size_t i = 0; i < series.size(); ++i) os << series.positions[i] << ',' << series.values[i] << '\n';
  return os.str();
}

}  // namespace omc
