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

#include <compare>

#include "omc/error.hpp"

namespace omc {

/// A strictly positive number written as mantissa * 10^exponent with the
/// mantissa in [1, 10).
struct ScientificValue {
  double mantissa = 1.0;
  int exponent = 0;

  friend bool operator==(const ScientificValue&, const ScientificValue&) = default;
};

/// How the position inside one decade is measured.
enum class WithinBandMode {
  MantissaLinear,  ///< t = (m - 1) / 9
  LogFraction,     ///< t = log10(m)
};

/// Decade index plus the position t in [0, 1) inside that decade.
struct BandPosition {
  int exponent = 0;
  double t = 0.0;

  friend auto operator<=>(const BandPosition&, const BandPosition&) = default;
};

/// Exact (correctly rounded) 10^e.
double pow10(int exponent);

/// Splits v into mantissa and exponent. Exact powers of ten, and anything
/// within 4 ulp of one, land on mantissa 1 of the upper decade. The mantissa
/// is the shortest decimal that round-trips v, so text inputs such as 5.5e-4
/// give mantissa 5.5 exactly.
ScientificValue decompose(double v);

double compose(const ScientificValue& sv);

BandPosition band_fraction(double v, WithinBandMode mode = WithinBandMode::MantissaLinear);

/// Position of v on a log10 axis spanning [vmin, vmax], clamped to [0, 1].
Clamped<double> log_normalize(double v, double vmin, double vmax);

/// Distance between two finite doubles of equal sign counted in units in the
/// last place.
long long ulp_distance(double a, double b);

}  // namespace omc
