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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "omc/metrics.hpp"

using namespace omc;

namespace {

const OmcColormap& iwc_omc() {
  static const OmcColormap cmap = build_omc(-8, -2);
  return cmap;
}

/// Walks the decades between the two ends and adds the covered part of each,
/// one tenth per mantissa unit on a ten-unit decade axis.
double range_size_oracle(const RangeAnswer& r) {
  const double lo = r.low.exponent * 10.0 + r.low.mantissa;
  const double hi = r.high.exponent * 10.0 + r.high.mantissa;
  double total = 0.0;
  for (int d = r.low.exponent; d <= r.high.exponent; ++d) {
    const double a = std::max(lo, d * 10.0);
    const double b = std::min(hi, d * 10.0 + 10.0);
    if (b > a) total += (b - a) / 10.0;
  }
  return total;
}

RangeAnswer answer(double low, double high) { return {decompose(low), decompose(high)}; }

}  // namespace

TEST_CASE("range_size: worked examples") {
  CHECK(range_size(answer(3e-6, 3e-6)) == 0.0);
  CHECK(range_size(answer(2e-5, 4e-4)) == 1.2);
  CHECK(range_size(answer(9e-5, 2e-4)) == 0.3);
}

TEST_CASE("range_size: inverted range is an error") {
  try {
    range_size(answer(4e-4, 2e-5));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRange);
  }
}

TEST_CASE("range_size: agrees with the decade summation oracle") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-12.0, 12.0);
  for (int i = 0; i < 1000; ++i) {
    double a = std::pow(10.0, u(rng));
    double b = std::pow(10.0, u(rng));
    if (a > b) std::swap(a, b);
    auto r = answer(a, b);
    double got = range_size(r);
    CHECK(got >= 0.0);
    CHECK(std::abs(got - range_size_oracle(r)) <= 1e-12);
  }
}

TEST_CASE("range_size: translation invariant in exponent") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> mant(1.0, 10.0);
  std::uniform_int_distribution<int> ex(-10, 5);
  std::uniform_int_distribution<int> shift(-6, 6);
  for (int i = 0; i < 500; ++i) {
    ScientificValue lo{mant(rng), ex(rng)};
    ScientificValue hi{mant(rng), lo.exponent + std::uniform_int_distribution<int>(0, 4)(rng)};
    if (compose(lo) > compose(hi)) std::swap(lo.mantissa, hi.mantissa);
    if (compose(lo) > compose(hi)) continue;
    const int k = shift(rng);
    RangeAnswer base{lo, hi};
    RangeAnswer moved{{lo.mantissa, lo.exponent + k}, {hi.mantissa, hi.exponent + k}};
    CHECK(range_size(base) == range_size(moved));
  }
}

TEST_CASE("delta_e_profile: trivial tables") {
  ColormapTable flat{.name = "flat", .stops = std::vector<Rgb>(5, Rgb(0.2, 0.4, 0.6))};
  auto p = delta_e_profile(flat);
  REQUIRE(p.size() == 4);
  for (double v : p.values) CHECK(v == 0.0);
  CHECK(p.positions == std::vector<double>{0.125, 0.375, 0.625, 0.875});

  ColormapTable bw{.name = "bw", .stops = {Rgb(0, 0, 0), Rgb(1, 1, 1)}};
  auto q = delta_e_profile(bw);
  REQUIRE(q.size() == 1);
  CHECK(q.values[0] == doctest::Approx(100.0).epsilon(1e-9));
  CHECK(q.positions[0] == 0.5);
  CHECK(delta_e_profile(bw, DeltaEMetric::CIEDE2000).values[0] == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("delta_e_profile: maxima sit on the band boundaries") {
  constexpr int kPerBand = 64;
  auto table = sample_table(iwc_omc(), 7 * kPerBand + 1);
  auto p = delta_e_profile(table);
  std::vector<std::size_t> maxima;
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    if (p.values[i] > p.values[i - 1] && p.values[i] > p.values[i + 1]) maxima.push_back(i);
  // Stop 64k opens band k, so the step 64k-1 -> 64k crosses a boundary.
  std::vector<std::size_t> expected;
  for (std::size_t k = 1; k <= 6; ++k) expected.push_back(k * kPerBand - 1);
  CHECK(maxima == expected);
}

TEST_CASE("delta_e_profile: reversal gives the reversed sequence") {
  for (const auto& table : {viridis_table(), rainbow_table(100), sample_table(iwc_omc(), 300)}) {
    auto fwd = delta_e_profile(table, DeltaEMetric::CIEDE2000);
    auto rev_table = table;
    std::reverse(rev_table.stops.begin(), rev_table.stops.end());
    auto rev = delta_e_profile(rev_table, DeltaEMetric::CIEDE2000);
    REQUIRE(fwd.size() == rev.size());
    for (std::size_t i = 0; i < fwd.size(); ++i)
      CHECK(rev.values[fwd.size() - 1 - i] == doctest::Approx(fwd.values[i]).epsilon(1e-12));
  }
}

TEST_CASE("hsv_profile: gray ramp has no saturation") {
  ColormapTable gray{.name = "gray"};
  for (int i = 0; i < 32; ++i) gray.stops.emplace_back(i / 31.0, i / 31.0, i / 31.0);
  auto p = hsv_profile(gray);
  REQUIRE(p.saturation.size() == 32);
  for (double s : p.saturation.values) CHECK(s == 0.0);
  CHECK(p.value.values.back() == 1.0);
}

TEST_CASE("hsv_profile: rainbow decreases from blue to red at full saturation") {
  auto p = hsv_profile(rainbow_table(64));
  CHECK(p.hue.values.front() == doctest::Approx(240.0));
  CHECK(p.hue.values.back() == doctest::Approx(0.0).epsilon(1e-9));
  for (std::size_t i = 1; i < p.hue.size(); ++i) CHECK(p.hue.values[i] < p.hue.values[i - 1]);
  for (double s : p.saturation.values) CHECK(s == doctest::Approx(1.0));
  for (double v : p.value.values) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("hsv_profile: OMC hue is nearly constant inside each band") {
  constexpr int kPerBand = 64;
  auto p = hsv_profile(sample_table(iwc_omc(), 7 * kPerBand));
  for (int b = 0; b < 7; ++b) {
    auto first = p.hue.values.begin() + b * kPerBand;
    auto [lo, hi] = std::minmax_element(first, first + kPerBand);
    CAPTURE(b);
    CHECK(*hi - *lo < 15.0);
  }
}

TEST_CASE("boundary_report: entry counts and smoothed variant") {
  auto two = build_omc(0, 1);
  auto r2 = boundary_report(two);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].index == 0);

  auto plain = boundary_report(iwc_omc());
  REQUIRE(plain.size() == 6);
  double lo = 1e9, hi = 0.0;
  for (const auto& e : plain) {
    lo = std::min(lo, e.delta_e);
    hi = std::max(hi, e.delta_e);
  }
  CHECK(hi / lo <= 1.25);

  auto smooth = boundary_report(build_omc_sl(-8, -2), DeltaEMetric::CIEDE2000);
  auto plain2000 = boundary_report(iwc_omc(), DeltaEMetric::CIEDE2000);
  for (std::size_t i = 0; i < smooth.size(); ++i) CHECK(smooth[i].delta_e < plain2000[i].delta_e);
}

TEST_CASE("monotonicity_check: built maps and a degenerate band") {
  for (const auto& r : monotonicity_check(iwc_omc())) {
    CHECK(r.monotone);
    CHECK(r.direction == Direction::Ascending);
    CHECK(r.min_step >= 0.05);
  }
  auto sl = monotonicity_check(build_omc_sl(-8, -2));
  for (std::size_t i = 0; i < sl.size(); ++i) {
    CHECK(sl[i].monotone);
    CHECK(sl[i].direction == (i % 2 == 0 ? Direction::Ascending : Direction::Descending));
  }

  ExponentBand flat{.exponent = 0, .hue_anchor = 0.0, .ramp_start = Lab(50, 20, 10), .ramp_end = Lab(50, 20, 10)};
  ExponentBand ok{.exponent = 1, .hue_anchor = 0.0, .ramp_start = Lab(30, 20, 10), .ramp_end = Lab(90, 20, 10)};
  OmcColormap hand(0, 1, {flat, ok}, Variant::Omc, WithinBandMode::MantissaLinear);
  auto r = monotonicity_check(hand);
  CHECK_FALSE(r[0].monotone);
  CHECK(r[0].min_step == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r[1].monotone);
}

TEST_CASE("to_csv: header and rows") {
  ProfileSeries s{{0.25, 0.75}, {1.5, 2.0}};
  CHECK(to_csv(s, "de76") == "position,de76\n0.25,1.5\n0.75,2\n");
}
