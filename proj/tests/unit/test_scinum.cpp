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
#include <limits>
#include <random>
#include <vector>

#include "omc/scinum.hpp"

using namespace omc;

namespace {

/// Log-uniform positive values with exponents in [lo, hi].
std::vector<double> random_values(std::size_t n, int lo, int hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi + 1);
  std::vector<double> out(n);
  for (double& v : out) v = std::pow(10.0, u(rng));
  return out;
}

}  // namespace

TEST_CASE("decompose: worked examples") {
  CHECK(decompose(3.5e-4) == ScientificValue{3.5, -4});
  CHECK(decompose(1.0) == ScientificValue{1.0, 0});
  CHECK(decompose(1e-2) == ScientificValue{1.0, -2});
  CHECK(decompose(9.999e5) == ScientificValue{9.999, 5});
  CHECK(decompose(123456.0) == ScientificValue{1.23456, 5});
}

TEST_CASE("decompose: rejects non-positive and non-finite input") {
  auto code_of = [](double v) {
    try {
      decompose(v);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no error");
    return ErrorCode::IoError;
  };
  CHECK(code_of(0.0) == ErrorCode::NonPositiveValue);
  CHECK(code_of(-1e-5) == ErrorCode::NonPositiveValue);
  CHECK(code_of(std::numeric_limits<double>::quiet_NaN()) == ErrorCode::NotFinite);
  CHECK(code_of(std::numeric_limits<double>::infinity()) == ErrorCode::NotFinite);
}

TEST_CASE("decompose: values within 4 ulp of a power of ten snap to it") {
  double below = 1e-3;
  for (int i = 0; i < 4; ++i) below = std::nextafter(below, 0.0);
  CHECK(decompose(below) == ScientificValue{1.0, -3});

  double above = 1e7;
  for (int i = 0; i < 4; ++i) above = std::nextafter(above, 1e300);
  CHECK(decompose(above) == ScientificValue{1.0, 7});

  // 0.1 + 0.2 style artifacts from text parsing.
  CHECK(decompose(0.1 * 3 / 3) == ScientificValue{1.0, -1});

  double far_below = 1e-3;
  for (int i = 0; i < 5; ++i) far_below = std::nextafter(far_below, 0.0);
  CHECK(decompose(far_below).exponent == -4);
}

TEST_CASE("compose: worked examples") {
  CHECK(ulp_distance(compose({3.5, -4}), 3.5e-4) <= 4);
  CHECK(compose({1.0, 0}) == 1.0);
  CHECK(ulp_distance(compose({9.999, 5}), 9.999e5) <= 4);
}

TEST_CASE("pow10 is correctly rounded") {
  CHECK(pow10(-8) == 1e-8);
  CHECK(pow10(-2) == 1e-2);
  CHECK(pow10(0) == 1.0);
  CHECK(pow10(22) == 1e22);
  CHECK(pow10(-300) == 1e-300);
}

TEST_CASE("band_fraction: worked examples") {
  CHECK(band_fraction(1e-4) == BandPosition{-4, 0.0});
  CHECK(band_fraction(5.5e-4, WithinBandMode::MantissaLinear) == BandPosition{-4, 0.5});
  const BandPosition log_pos = band_fraction(5.5e-4, WithinBandMode::LogFraction);
  CHECK(log_pos.exponent == -4);
  // log10(5.5) from a 30-digit evaluation.
  CHECK(log_pos.t == doctest::Approx(0.740362689494243845536).epsilon(1e-15));
  CHECK(band_fraction(1e-4, WithinBandMode::LogFraction).t == 0.0);
}

TEST_CASE("log_normalize: anchors, midpoint and clamping") {
  const double lo = 1e-8;
  const double hi = 1e-2;
  CHECK(log_normalize(lo, lo, hi).value == 0.0);
  CHECK(log_normalize(hi, lo, hi).value == 1.0);
  CHECK(log_normalize(std::sqrt(lo * hi), lo, hi).value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(log_normalize(1e-5, lo, hi).clamped);

  const auto below = log_normalize(1e-9, lo, hi);
  CHECK(below.value == 0.0);
  CHECK(below.clamped);
  const auto above = log_normalize(1.0, lo, hi);
  CHECK(above.value == 1.0);
  CHECK(above.clamped);

  CHECK_THROWS_AS(log_normalize(1.0, 1.0, 1.0), Error);
  CHECK_THROWS_AS(log_normalize(1.0, 0.0, 1.0), Error);
  CHECK_THROWS_AS(log_normalize(1.0, 10.0, 1.0), Error);
}

TEST_CASE("property: compose(decompose(v)) == v within 4 ulp") {
  for (double v : random_values(20000, -12, 12, 1)) {
    const ScientificValue sv = decompose(v);
    REQUIRE(sv.mantissa >= 1.0);
    REQUIRE(sv.mantissa < 10.0);
    REQUIRE(ulp_distance(compose(sv), v) <= 4);
  }
}

TEST_CASE("property: band_fraction is lexicographically monotone") {
  for (auto mode : {WithinBandMode::MantissaLinear, WithinBandMode::LogFraction}) {
    std::vector<double> vs = random_values(5000, -9, 3, 2);
    std::sort(vs.begin(), vs.end());
    BandPosition prev = band_fraction(vs.front(), mode);
    for (double v : vs) {
      const BandPosition cur = band_fraction(v, mode);
      REQUIRE(prev <= cur);
      prev = cur;
    }
  }
}

TEST_CASE("property: log_normalize is increasing and scale invariant") {
  const double lo = 3e-7;
  const double hi = 4e-2;
  std::vector<double> vs = random_values(2000, -6, -3, 3);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  double prev = -1.0;
  for (double v : vs) {
    const double t = log_normalize(v, lo, hi).value;
    REQUIRE(t > prev);
    prev = t;
    for (double k : {1e-3, 7.5, 1e4}) {
      REQUIRE(std::abs(log_normalize(v * k, lo * k, hi * k).value - t) <= 1e-12);
    }
  }
}
