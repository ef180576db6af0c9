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

#include "omc/scinum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <system_error>

namespace omc {

namespace {

constexpr long long kSnapUlps = 4;

void require_positive_finite(double v) {
  if (std::isnan(v) || std::isinf(v)) {
    throw Error(ErrorCode::NotFinite, "value is not finite");
  }
  if (!(v > 0.0)) {
    throw Error(ErrorCode::NonPositiveValue, "value must be > 0, got " + std::to_string(v));
  }
}

}  // namespace

double pow10(int exponent) {
  // strtod-style parsing is correctly rounded, std::pow is not guaranteed to be.
  std::array<char, 16> buf{'1', 'e'};
  auto [end, ec] = std::to_chars(buf.data() + 2, buf.data() + buf.size(), exponent);
  double out = 0.0;
  std::from_chars(buf.data(), end, out);
  return out;
}

long long ulp_distance(double a, double b) {
  const auto ia = std::bit_cast<std::int64_t>(a);
  const auto ib = std::bit_cast<std::int64_t>(b);
  return ia > ib ? ia - ib : ib - ia;
}

ScientificValue decompose(double v) {
  require_positive_finite(v);

  const int nearest = static_cast<int>(std::lround(std::log10(v)));
  if (ulp_distance(v, pow10(nearest)) <= kSnapUlps) {
    return {1.0, nearest};
  }

  // Shortest round-trip scientific form: "d.ddddde-XX".
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific);
  const char* e_pos = std::find(buf.data(), end, 'e');

  ScientificValue sv;
  std::from_chars(buf.data(), e_pos, sv.mantissa);
  const char* exp_begin = e_pos + 1;
  if (*exp_begin == '+') ++exp_begin;
  std::from_chars(exp_begin, end, sv.exponent);
  return sv;
}

double compose(const ScientificValue& sv) { return sv.mantissa * pow10(sv.exponent); }

BandPosition band_fraction(double v, WithinBandMode mode) {
  const ScientificValue sv = decompose(v);
  const double t = mode == WithinBandMode::MantissaLinear ? (sv.mantissa - 1.0) / 9.0 : std::log10(sv.mantissa);
  return {sv.exponent, std::clamp(t, 0.0, 1.0)};
}

Clamped<double> log_normalize(double v, double vmin, double vmax) {
  if (!(vmin > 0.0) || !(vmin < vmax) || !std::isfinite(vmax)) {
    throw Error(ErrorCode::InvalidDomain, "log domain requires 0 < vmin < vmax");
  }
  require_positive_finite(v);
  if (v <= vmin) return {0.0, v < vmin};
  if (v >= vmax) return {1.0, v > vmax};
  const double lo = std::log10(vmin);
  const double t = (std::log10(v) - lo) / (std::log10(vmax) - lo);
  return {std::clamp(t, 0.0, 1.0), false};
}

}  // namespace omc
