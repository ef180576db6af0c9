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

#include "omc/colormap.hpp"

using namespace omc;

namespace {

const HueRampSolver& solver() {
  static const HueRampSolver s;
  return s;
}

double ratio(const std::vector<double>& des) {
  auto [lo, hi] = std::minmax_element(des.begin(), des.end());
  return *hi / *lo;
}

}  // namespace

TEST_CASE("default_hues: evenly spaced from zero") {
  CHECK(default_hues(2) == std::vector<double>{0.0, 180.0});
  auto h12 = default_hues(12);
  REQUIRE(h12.size() == 12);
  CHECK(h12.front() == 0.0);
  CHECK(h12.back() == 330.0);
}

TEST_CASE("equalize_hues: two bands have a single boundary") {
  auto r = equalize_hues(2, default_hues(2), solver());
  CHECK(r.converged);
  CHECK(r.hues == default_hues(2));
  auto des = boundary_delta_es(r.hues, solver());
  REQUIRE(des.size() == 1);
  CHECK(ratio(des) == 1.0);
  CHECK(r.final_objective == 0.0);
}

TEST_CASE("equalize_hues: seven bands never worsen the objective") {
  auto seed = default_hues(7);
  auto r = equalize_hues(7, seed, solver());
  CHECK(r.converged);
  CHECK(r.final_objective <= r.initial_objective);
  CHECK(r.initial_objective == doctest::Approx(boundary_variance(seed, solver())));
  CHECK(r.final_objective == doctest::Approx(boundary_variance(r.hues, solver())));
  CHECK(ratio(boundary_delta_es(r.hues, solver())) <= 1.25);
  CHECK(r.hues.front() == seed.front());
  CHECK(r.hues.back() == seed.back());
}

TEST_CASE("equalize_hues: matches a 0.5 degree brute-force grid for three bands") {
  const std::vector<double> seed{0.0, 100.0, 220.0};
  auto r = equalize_hues(3, seed, solver());
  REQUIRE(r.converged);

  // Interior hue is the only free coordinate; scan its whole admissible bracket.
  const double gap = 360.0 / 6.0;
  double best_h = 0.0;
  double best_f = 1e300;
  for (double h = seed[0] + gap; h <= seed[2] - gap + 1e-9; h += 0.5) {
    double f = boundary_variance({seed[0], h, seed[2]}, solver());
    if (f < best_f) {
      best_f = f;
      best_h = h;
    }
  }
  CHECK(std::abs(r.hues[1] - best_h) <= 1.0);
  CHECK(r.final_objective <= best_f + 1e-9);
}

TEST_CASE("equalize_hues: deterministic and order preserving") {
  const std::vector<double> seed{10.0, 70.0, 150.0, 200.0, 260.0, 330.0};
  auto a = equalize_hues(6, seed, solver());
  auto b = equalize_hues(6, seed, solver());
  CHECK(a.hues == b.hues);
  CHECK(a.sweeps == b.sweeps);
  const double gap = 360.0 / 12.0;
  for (std::size_t k = 1; k < a.hues.size(); ++k) CHECK(a.hues[k] - a.hues[k - 1] >= gap - 1e-9);
}

TEST_CASE("equalize_hues: objective non-increasing across sweep limits") {
  auto seed = default_hues(9);
  double prev = boundary_variance(seed, solver());
  for (int sweeps = 1; sweeps <= 4; ++sweeps) {
    auto r = equalize_hues(9, seed, solver(), sweeps);
    CHECK(r.final_objective <= prev);
    prev = r.final_objective;
  }
}

TEST_CASE("equalize_hues: sweep limit reports non-convergence with best-so-far hues") {
  auto seed = default_hues(7);
  auto r = equalize_hues(7, seed, solver(), 1);
  CHECK_FALSE(r.converged);
  CHECK(r.sweeps == 1);
  CHECK(r.final_objective < r.initial_objective);
  CHECK(r.final_objective == doctest::Approx(boundary_variance(r.hues, solver())));
}

TEST_CASE("equalize_hues: every span reaches the boundary ratio target") {
  for (int n = 2; n <= kMaxBands; ++n) {
    CAPTURE(n);
    auto r = equalize_hues(n, default_hues(n), solver());
    CHECK(r.converged);
    CHECK(ratio(boundary_delta_es(r.hues, solver())) <= 1.25);
  }
}

TEST_CASE("equalize_hues: input validation") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code([] { equalize_hues(1, {0.0}, solver()); }) == ErrorCode::InvalidArgument);
  CHECK(code([] { equalize_hues(13, default_hues(12), solver()); }) == ErrorCode::TooManyBands);
  CHECK(code([] { equalize_hues(3, {0.0, 100.0}, solver()); }) == ErrorCode::InvalidArgument);
  CHECK(code([] { equalize_hues(3, {0.0, 200.0, 100.0}, solver()); }) == ErrorCode::InvalidArgument);
  CHECK(code([] { equalize_hues(3, {0.0, 100.0, 360.0}, solver()); }) == ErrorCode::InvalidArgument);
}
