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

#include "omc/colormap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace omc {

namespace detail {
extern const std::array<std::array<double, 3>, 256> kViridisData;
}  // namespace detail

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kHueTableSize = 3600;
constexpr double kHueFamilyTolerance = 15.0;
constexpr double kMinRampContrast = 20.0;

double wrap_degrees(double h) {
  h = std::fmod(h, 360.0);
  return h < 0.0 ? h + 360.0 : h;
}

/// Signed shortest angular difference a - b in degrees, (-180, 180].
double hue_difference(double a, double b) {
  double d = wrap_degrees(a - b);
  return d > 180.0 ? d - 360.0 : d;
}

void check_span(int e_min, int e_max) {
  if (e_min >= e_max) {
    throw Error(ErrorCode::InvalidSpan,
                "need e_min < e_max, got [" + std::to_string(e_min) + ", " + std::to_string(e_max) + "]");
  }
  if (e_max - e_min + 1 > kMaxBands) {
    throw Error(ErrorCode::TooManyBands, std::to_string(e_max - e_min + 1) + " decades exceed the limit of " +
                                             std::to_string(kMaxBands));
  }
}

}  // namespace

Lab HueRamp::at_lightness(double lightness) const {
  return {lightness, chroma * std::cos(lab_hue), chroma * std::sin(lab_hue)};
}

HueRampSolver::HueRampSolver(const RampTemplate& ramp) : template_(ramp) {
  if (!(ramp.lightness_low >= 0.0 && ramp.lightness_high <= 100.0 && ramp.lightness_low < ramp.lightness_high)) {
    throw Error(ErrorCode::InvalidArgument, "ramp lightness must satisfy 0 <= low < high <= 100");
  }
  if (!(ramp.chroma_headroom > 0.0 && ramp.chroma_headroom <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "chroma headroom must lie in (0, 1]");
  }

  lab_hues_.reserve(kHueTableSize + 1);
  mid_hues_.reserve(kHueTableSize + 1);
  for (int i = 0; i <= kHueTableSize; ++i) {
    const double lab_hue = kTwoPi * i / kHueTableSize;
    double h = midpoint_hsv_hue(lab_hue);
    if (!mid_hues_.empty()) {
      // Unwrap, then force monotonicity so the inverse is single valued.
      h = mid_hues_.back() + wrap_degrees(h - mid_hues_.back());
      if (h - mid_hues_.back() > 180.0) h = mid_hues_.back();
    }
    lab_hues_.push_back(lab_hue);
    mid_hues_.push_back(h);
  }
}

double HueRampSolver::max_chroma(double lab_hue) const {
  const double mid = 0.5 * (template_.lightness_low + template_.lightness_high);
  const std::array<double, 3> checks{template_.lightness_low, mid, template_.lightness_high};
  const double ca = std::cos(lab_hue);
  const double sb = std::sin(lab_hue);
  auto fits = [&](double c) {
    return std::all_of(checks.begin(), checks.end(), [&](double l) { return in_srgb_gamut(Lab(l, c * ca, c * sb)); });
  };
  double lo = 0.0;
  double hi = 200.0;
  for (int it = 0; it < 48; ++it) {
    const double m = 0.5 * (lo + hi);
    (fits(m) ? lo : hi) = m;
  }
  return lo;
}

double HueRampSolver::midpoint_hsv_hue(double lab_hue) const {
  HueRamp ramp{0.0, lab_hue, template_.chroma_headroom * max_chroma(lab_hue)};
  const Lab mid = ramp.at_lightness(0.5 * (template_.lightness_low + template_.lightness_high));
  return srgb_to_hsv(lab_to_srgb(mid).value).h();
}

HueRamp HueRampSolver::solve(double hue_anchor) const {
  const double base = mid_hues_.front();
  const double target = base + wrap_degrees(hue_anchor - base);
  const double span = mid_hues_.back() - base;  // 360 up to unwrap slack

  // Targets beyond the tabulated turn (possible only if the table is short of
  // a full turn) snap onto the closing segment.
  const double t = std::min(target, base + span);
  auto it = std::upper_bound(mid_hues_.begin(), mid_hues_.end(), t);
  std::size_t hi = static_cast<std::size_t>(std::distance(mid_hues_.begin(), it));
  hi = std::clamp<std::size_t>(hi, 1, mid_hues_.size() - 1);
  const std::size_t lo = hi - 1;
  const double width = mid_hues_[hi] - mid_hues_[lo];
  const double frac = width > 0.0 ? (t - mid_hues_[lo]) / width : 0.0;
  double lab_hue = lab_hues_[lo] + frac * (lab_hues_[hi] - lab_hues_[lo]);
  lab_hue = std::fmod(lab_hue, kTwoPi);

  return {wrap_degrees(hue_anchor), lab_hue, template_.chroma_headroom * max_chroma(lab_hue)};
}

std::vector<std::string> band_invariant_violations(const ExponentBand& band) {
  std::vector<std::string> out;
  for (const Lab* end : {&band.ramp_start, &band.ramp_end}) {
    const Hsv hsv = srgb_to_hsv(lab_to_srgb(*end).value);
    const double d = std::abs(hue_difference(hsv.h(), band.hue_anchor));
    if (hsv.s() > 0.0 && d > kHueFamilyTolerance) {
      out.push_back("band " + std::to_string(band.exponent) + ": endpoint hue " + std::to_string(hsv.h()) +
                    " is " + std::to_string(d) + " degrees from anchor");
    }
  }
  const double contrast = band.ramp_end.L() - band.ramp_start.L();
  if (std::abs(contrast) < kMinRampContrast) {
    out.push_back("band " + std::to_string(band.exponent) + ": lightness contrast " + std::to_string(contrast) +
                  " below " + std::to_string(kMinRampContrast));
  }
  const bool ascending = contrast > 0.0;
  if (ascending != (band.direction == Direction::Ascending)) {
    out.push_back("band " + std::to_string(band.exponent) + ": direction flag disagrees with ramp endpoints");
  }
  return out;
}

OmcColormap::OmcColormap(int e_min, int e_max, std::vector<ExponentBand> bands, Variant variant, WithinBandMode mode)
    : e_min_(e_min), e_max_(e_max), bands_(std::move(bands)), variant_(variant), mode_(mode) {
  check_span(e_min_, e_max_);
  if (static_cast<int>(bands_.size()) != e_max_ - e_min_ + 1) {
    throw Error(ErrorCode::InvalidArgument, "band count does not match exponent span");
  }
  for (std::size_t k = 0; k < bands_.size(); ++k) {
    if (bands_[k].exponent != e_min_ + static_cast<int>(k)) {
      throw Error(ErrorCode::InvalidArgument, "bands must cover consecutive exponents in increasing order");
    }
  }
}

std::vector<double> default_hues(int n_bands) {
  std::vector<double> hues(static_cast<std::size_t>(std::max(n_bands, 0)));
  for (int i = 0; i < n_bands; ++i) hues[static_cast<std::size_t>(i)] = 360.0 * i / n_bands;
  return hues;
}

namespace {

OmcColormap build(int e_min, int e_max, const BuildOptions& options, Variant variant) {
  check_span(e_min, e_max);
  const int n = e_max - e_min + 1;
  const HueRampSolver solver(options.ramp);

  std::vector<double> hues = options.initial_hues.empty() ? default_hues(n) : options.initial_hues;
  if (static_cast<int>(hues.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "initial_hues needs one hue per band");
  }
  if (options.equalize) hues = equalize_hues(n, hues, solver).hues;

  std::vector<ExponentBand> bands;
  bands.reserve(static_cast<std::size_t>(n));
  Direction dir = options.first_direction;
  for (int k = 0; k < n; ++k) {
    const HueRamp ramp = solver.solve(hues[static_cast<std::size_t>(k)]);
    const Lab dark = ramp.at_lightness(options.ramp.lightness_low);
    const Lab light = ramp.at_lightness(options.ramp.lightness_high);
    ExponentBand band;
    band.exponent = e_min + k;
    band.hue_anchor = ramp.hue_anchor;
    band.direction = dir;
    band.ramp_start = dir == Direction::Ascending ? dark : light;
    band.ramp_end = dir == Direction::Ascending ? light : dark;
    bands.push_back(band);
    if (variant == Variant::OmcSmoothedLightness) {
      dir = dir == Direction::Ascending ? Direction::Descending : Direction::Ascending;
    }
  }
  return OmcColormap(e_min, e_max, std::move(bands), variant, options.mode);
}

}  // namespace

OmcColormap build_omc(int e_min, int e_max, const BuildOptions& options) {
  return build(e_min, e_max, options, Variant::Omc);
}

OmcColormap build_omc_sl(int e_min, int e_max, const BuildOptions& options) {
  return build(e_min, e_max, options, Variant::OmcSmoothedLightness);
}

Clamped<Rgb> lookup(const OmcColormap& cmap, double v) {
  const BandPosition pos = band_fraction(v, cmap.within_band_mode());
  if (pos.exponent < cmap.e_min()) {
    return {lab_to_srgb(cmap.bands().front().color_at(0.0)).value, true};
  }
  if (pos.exponent > cmap.e_max()) {
    return {lab_to_srgb(cmap.bands().back().color_at(1.0)).value, true};
  }
  return {lab_to_srgb(cmap.band(pos.exponent).color_at(pos.t)).value, false};
}

void validate(const ColormapTable& table) {
  if (table.stops.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "a colormap table needs at least 2 stops");
  }
  for (const Rgb& c : table.stops) {
    if (!((c.array() >= 0.0).all() && (c.array() <= 1.0).all())) {
      throw Error(ErrorCode::InvalidArgument, "table channel outside [0, 1]");
    }
  }
}

double sample_value(const OmcColormap& cmap, int index, int n) {
  const long long numerator = static_cast<long long>(cmap.band_count()) * index;
  if (numerator % (n - 1) == 0) {
    return pow10(cmap.e_min() + static_cast<int>(numerator / (n - 1)));
  }
  const double x = cmap.e_min() + static_cast<double>(numerator) / (n - 1);
  return std::pow(10.0, x);
}

ColormapTable sample_table(const OmcColormap& cmap, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "sample_table needs n >= 2");
  ColormapTable table;
  table.name = std::string(to_string(cmap.variant()));
  table.scale_hint = ScaleHint::Log;
  table.variant = cmap.variant();
  table.e_min = cmap.e_min();
  table.e_max = cmap.e_max();
  table.within_band_mode = cmap.within_band_mode();
  table.stops.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) table.stops.push_back(lookup(cmap, sample_value(cmap, i, n)).value);
  return table;
}

ColormapTable viridis_table() {
  ColormapTable table;
  table.name = "viridis";
  table.stops.reserve(detail::kViridisData.size());
  for (const auto& c : detail::kViridisData) table.stops.emplace_back(c[0], c[1], c[2]);
  return table;
}

ColormapTable rainbow_table(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "rainbow_table needs n >= 2");
  ColormapTable table;
  table.name = "rainbow";
  table.stops.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double h = 240.0 * (1.0 - static_cast<double>(i) / (n - 1));
    table.stops.push_back(hsv_to_srgb(Hsv(h, 1.0, 1.0)));
  }
  return table;
}

std::string_view to_string(Variant v) { return v == Variant::Omc ? "omc" : "omc_sl"; }

std::string_view to_string(WithinBandMode m) {
  return m == WithinBandMode::MantissaLinear ? "mantissa-linear" : "log-fraction";
}

std::string_view to_string(Direction d) { return d == Direction::Ascending ? "ascending" : "descending"; }

std::string_view to_string(ScaleHint s) { return s == ScaleHint::Linear ? "linear" : "log"; }

Variant parse_variant(std::string_view s) {
  if (s == "omc") return Variant::Omc;
  if (s == "omc_sl") return Variant::OmcSmoothedLightness;
  throw Error(ErrorCode::InvalidArgument, "unknown variant '" + std::string(s) + "'");
}

WithinBandMode parse_within_band_mode(std::string_view s) {
  if (s == "mantissa-linear") return WithinBandMode::MantissaLinear;
  if (s == "log-fraction") return WithinBandMode::LogFraction;
  throw Error(ErrorCode::InvalidArgument, "unknown within-band mode '" + std::string(s) + "'");
}

ScaleHint parse_scale_hint(std::string_view s) {
  if (s == "linear") return ScaleHint::Linear;
  if (s == "log") return ScaleHint::Log;
  throw Error(ErrorCode::InvalidArgument, "unknown scale hint '" + std::string(s) + "'");
}

}  // namespace omc
