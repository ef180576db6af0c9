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

#include <optional>
#include <string>
#include <vector>

#include "omc/color.hpp"
#include "omc/error.hpp"
#include "omc/scinum.hpp"

namespace omc {

/// Lightness direction along increasing mantissa.
enum class Direction { Ascending, Descending };

enum class Variant {
  Omc,                   ///< every band runs in the same lightness direction
  OmcSmoothedLightness,  ///< every second band is flipped
};

enum class ScaleHint { Linear, Log };

/// Maximum number of decades a single OMC map may carry.
inline constexpr int kMaxBands = 12;

/// Lightness endpoints and chroma policy shared by every band ramp.
struct RampTemplate {
  double lightness_low = 30.0;
  double lightness_high = 90.0;
  /// Fraction of the largest in-gamut chroma actually used. Values below 1
  /// keep the ramp away from the gamut surface, where HSV hue bends sharply.
  double chroma_headroom = 0.9;
};

/// Constant-hue straight line in Lab for one hue anchor.
struct HueRamp {
  double hue_anchor = 0.0;  ///< HSV hue (degrees) at the ramp midpoint
  double lab_hue = 0.0;     ///< Lab hue angle, radians
  double chroma = 0.0;

  Lab at_lightness(double lightness) const;
};

/// Maps HSV hue anchors to Lab ramps for one template. Construction
/// tabulates the midpoint hue over the Lab hue circle once; queries are cheap.
class HueRampSolver {
 public:
  explicit HueRampSolver(const RampTemplate& ramp = {});

  HueRamp solve(double hue_anchor) const;
  const RampTemplate& ramp_template() const { return template_; }

  /// Largest chroma at `lab_hue` keeping the template endpoints and midpoint in gamut.
  double max_chroma(double lab_hue) const;

 private:
  double midpoint_hsv_hue(double lab_hue) const;

  RampTemplate template_;
  std::vector<double> lab_hues_;  // strictly increasing, radians
  std::vector<double> mid_hues_;  // unwrapped HSV hue in degrees, increasing
};

struct ExponentBand {
  int exponent = 0;
  double hue_anchor = 0.0;
  Lab ramp_start;  ///< color at t = 0
  Lab ramp_end;    ///< color at t = 1
  Direction direction = Direction::Ascending;

  Lab color_at(double t) const { return Lab(ramp_start + t * (ramp_end - ramp_start)); }
};

/// Human-readable list of broken band invariants (hue family, lightness
/// contrast). Empty when the band is well formed.
std::vector<std::string> band_invariant_violations(const ExponentBand& band);

class OmcColormap {
 public:
  /// Throws InvalidSpan / TooManyBands / InvalidArgument on structural problems.
  OmcColormap(int e_min, int e_max, std::vector<ExponentBand> bands, Variant variant, WithinBandMode mode);

  int e_min() const { return e_min_; }
  int e_max() const { return e_max_; }
  int band_count() const { return static_cast<int>(bands_.size()); }
  Variant variant() const { return variant_; }
  WithinBandMode within_band_mode() const { return mode_; }
  const std::vector<ExponentBand>& bands() const { return bands_; }
  const ExponentBand& band(int exponent) const { return bands_.at(static_cast<std::size_t>(exponent - e_min_)); }

  double domain_min() const { return pow10(e_min_); }
  double domain_max() const { return pow10(e_max_ + 1); }

 private:
  int e_min_;
  int e_max_;
  std::vector<ExponentBand> bands_;
  Variant variant_;
  WithinBandMode mode_;
};

struct BuildOptions {
  RampTemplate ramp;
  WithinBandMode mode = WithinBandMode::MantissaLinear;
  /// Starting hue anchors, one per band. Empty selects i * 360 / n.
  std::vector<double> initial_hues;
  bool equalize = true;
  /// Direction of the first band; OMC keeps it for all bands.
  Direction first_direction = Direction::Ascending;
};

/// Sweep limit of equalize_hues before it reports non-convergence.
inline constexpr int kMaxEqualizeSweeps = 200;

/// Outcome of the hue-spacing optimizer.
struct EqualizeResult {
  std::vector<double> hues;
  double initial_objective = 0.0;
  double final_objective = 0.0;
  int sweeps = 0;
  bool converged = true;  ///< false: gave up after the sweep limit, hues are best-so-far
};

/// Default seed anchors: evenly spaced, i * 360 / n.
std::vector<double> default_hues(int n_bands);

/// Boundary DeltaE76 values for a hue sequence: high end of band k against
/// the low end of band k+1, both on the template ramps.
std::vector<double> boundary_delta_es(const std::vector<double>& hues, const HueRampSolver& solver);

/// Population variance of boundary_delta_es, the equalizer objective.
double boundary_variance(const std::vector<double>& hues, const HueRampSolver& solver);

/// Coordinate descent over the interior hues (first and last stay fixed),
/// each step a bracketed golden-section line search, minimizing the variance
/// of boundary DeltaE76. Neighbouring hues keep at least 360 / (2n) degrees
/// apart so the cyclic order of the seed is preserved.
EqualizeResult equalize_hues(int n_bands, const std::vector<double>& initial_hues, const RampTemplate& ramp = {});
EqualizeResult equalize_hues(int n_bands, const std::vector<double>& initial_hues, const HueRampSolver& solver,
                             int max_sweeps = kMaxEqualizeSweeps);

OmcColormap build_omc(int e_min, int e_max, const BuildOptions& options = {});
OmcColormap build_omc_sl(int e_min, int e_max, const BuildOptions& options = {});

/// Color for v. Values outside [10^e_min, 10^(e_max+1)) clamp to the first or
/// last color and set `clamped`.
Clamped<Rgb> lookup(const OmcColormap& cmap, double v);

/// Flat list of sRGB stops.
struct ColormapTable {
  std::string name;
  std::vector<Rgb> stops;
  ScaleHint scale_hint = ScaleHint::Linear;
  std::optional<Variant> variant;
  std::optional<int> e_min;
  std::optional<int> e_max;
  std::optional<WithinBandMode> within_band_mode;

  int size() const { return static_cast<int>(stops.size()); }
};

/// Throws InvalidArgument if the table has fewer than 2 stops or a channel
/// outside [0, 1].
void validate(const ColormapTable& table);

/// n stops at log-equidistant values over [10^e_min, 10^(e_max+1)].
ColormapTable sample_table(const OmcColormap& cmap, int n);

/// Value at which sample_table places stop `index` of `n`.
double sample_value(const OmcColormap& cmap, int index, int n);

ColormapTable viridis_table();
ColormapTable rainbow_table(int n = 256);

std::string_view to_string(Variant v);
std::string_view to_string(WithinBandMode m);
std::string_view to_string(Direction d);
std::string_view to_string(ScaleHint s);
Variant parse_variant(std::string_view s);
WithinBandMode parse_within_band_mode(std::string_view s);
ScaleHint parse_scale_hint(std::string_view s);

}  // namespace omc
