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

#include <algorithm>
#include <cmath>
#include <limits>

#include "omc/colormap.hpp"

namespace omc {

namespace {

constexpr double kRelativeTolerance = 1e-6;
constexpr double kScanStepDegrees = 1.0;
constexpr double kGoldenTolerance = 1e-7;

double mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

void check_hues(int n_bands, const std::vector<double>& hues) {
  if (n_bands < 2 || n_bands > kMaxBands) {
    throw Error(n_bands > kMaxBands ? ErrorCode::TooManyBands : ErrorCode::InvalidArgument,
                "band count must lie in [2, " + std::to_string(kMaxBands) + "]");
  }
  if (static_cast<int>(hues.size()) != n_bands) {
    throw Error(ErrorCode::InvalidArgument, "need one initial hue per band");
  }
  for (std::size_t k = 1; k < hues.size(); ++k) {
    if (!(hues[k] > hues[k - 1])) throw Error(ErrorCode::InvalidArgument, "initial hues must be strictly increasing");
  }
  if (!(hues.back() - hues.front() < 360.0)) {
    throw Error(ErrorCode::InvalidArgument, "initial hues must fit inside one turn");
  }
}

/// Minimizes f over [lo, hi]: a coarse scan picks the best grid cell, golden
/// section refines inside the cells around it. The scan keeps the search from
/// settling in a poor local minimum when f is not unimodal on the bracket.
template <typename F>
double line_search(F&& f, double lo, double hi) {
  const int cells = std::max(2, static_cast<int>(std::ceil((hi - lo) / kScanStepDegrees)));
  const double step = (hi - lo) / cells;
  int best = 0;
  double best_f = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= cells; ++i) {
    const double fx = f(lo + step * i);
    if (fx < best_f) {
      best_f = fx;
      best = i;
    }
  }

  double a = lo + step * std::max(best - 1, 0);
  double b = lo + step * std::min(best + 1, cells);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > kGoldenTolerance) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double refined = 0.5 * (a + b);
  return f(refined) <= best_f ? refined : lo + step * best;
}

std::vector<double> ramp_boundaries(const std::vector<HueRamp>& ramps, const RampTemplate& t) {
  std::vector<double> out;
  if (ramps.size() < 2) return out;
  out.reserve(ramps.size() - 1);
  for (std::size_t k = 1; k < ramps.size(); ++k) {
    out.push_back(delta_e_76(ramps[k - 1].at_lightness(t.lightness_high), ramps[k].at_lightness(t.lightness_low)));
  }
  return out;
}

double variance(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size());
}

std::vector<HueRamp> solve_all(const std::vector<double>& hues, const HueRampSolver& solver) {
  std::vector<HueRamp> ramps;
  ramps.reserve(hues.size());
  for (double h : hues) ramps.push_back(solver.solve(h));
  return ramps;
}

}  // namespace

std::vector<double> boundary_delta_es(const std::vector<double>& hues, const HueRampSolver& solver) {
  return ramp_boundaries(solve_all(hues, solver), solver.ramp_template());
}

double boundary_variance(const std::vector<double>& hues, const HueRampSolver& solver) {
  return variance(boundary_delta_es(hues, solver));
}

EqualizeResult equalize_hues(int n_bands, const std::vector<double>& initial_hues, const RampTemplate& ramp) {
  return equalize_hues(n_bands, initial_hues, HueRampSolver(ramp));
}

EqualizeResult equalize_hues(int n_bands, const std::vector<double>& initial_hues, const HueRampSolver& solver,
                             int max_sweeps) {
  check_hues(n_bands, initial_hues);

  EqualizeResult result;
  result.hues = initial_hues;
  std::vector<HueRamp> ramps = solve_all(result.hues, solver);
  result.initial_objective = variance(ramp_boundaries(ramps, solver.ramp_template()));
  double current = result.initial_objective;
  const double min_gap = 360.0 / (2.0 * n_bands);

  result.converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = current;
    for (std::size_t k = 1; k + 1 < result.hues.size(); ++k) {
      const double lo = result.hues[k - 1] + min_gap;
      const double hi = result.hues[k + 1] - min_gap;
      if (!(lo < hi)) continue;

      std::vector<HueRamp> trial = ramps;
      auto objective = [&](double h) {
        trial[k] = solver.solve(h);
        return variance(ramp_boundaries(trial, solver.ramp_template()));
      };
      const double candidate = line_search(objective, lo, hi);
      const double value = objective(candidate);
      if (value < current) {
        result.hues[k] = candidate;
        ramps[k] = trial[k];
        current = value;
      }
    }
    result.sweeps = sweep + 1;
    if (before - current <= kRelativeTolerance * before) {
      result.converged = true;
      break;
    }
  }
  result.final_objective = current;
  return result;
}

}  // namespace omc
