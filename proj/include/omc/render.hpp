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
#include <utility>
#include <variant>
#include <vector>

#include "omc/colormap.hpp"
#include "omc/image.hpp"
#include "omc/ingest.hpp"

namespace omc {

/// Either an exact OMC description or a flat table of stops.
using ColormapSource = std::variant<OmcColormap, ColormapTable>;

enum class ColorbarPlacement { None, Right, Below };
enum class Orientation { Horizontal, Vertical };

struct ColorbarSpec {
  Orientation orientation = Orientation::Horizontal;
  int length = 512;     ///< pixels along the value axis, at least 256
  int thickness = 24;   ///< swatch width across the value axis
  int tick_length = 6;  ///< rule marks drawn beyond the swatch at powers of ten
  bool labels = false;  ///< draw "10^e" next to each tick
  Rgb8 tick_color{0, 0, 0};
  Rgb8 background{255, 255, 255};
};

struct RenderSpec {
  int width = 1291;
  int height = 500;
  AxisRange x_range{0.0, 24.0};  ///< hours
  AxisRange y_range{0.0, 12.0};  ///< km
  int point_size = 3;
  Rgb8 background{255, 255, 255};
  ColorbarPlacement colorbar = ColorbarPlacement::None;
  ColorbarSpec colorbar_style{};
  /// Quantization of OMC maps: stops per decade in the lookup table.
  int lut_stops_per_band = 256;
  /// Log domain for table colormaps; defaults to the observed value range.
  std::optional<std::pair<double, double>> table_domain;
};

/// Throws InvalidArgument when the spec breaks its invariants.
void validate(const RenderSpec& spec);

/// Discrete value -> color map shared by scatter and colorbar rendering. For
/// OMC maps the stops are sample_table(cmap, bands * stops_per_band + 1) and a
/// value always resolves to a stop inside its own decade.
class ColorLut {
 public:
  static ColorLut from_omc(const OmcColormap& cmap, int stops_per_band);
  static ColorLut from_table(const ColormapTable& table, double vmin, double vmax);

  Clamped<Rgb8> color(double v) const;
  const std::vector<Rgb8>& colors() const { return colors_; }
  double vmin() const { return vmin_; }
  double vmax() const { return vmax_; }
  /// Exponents e with 10^e inside [vmin, vmax].
  std::vector<int> decade_ticks() const;

 private:
  std::vector<Rgb8> colors_;
  double vmin_ = 1.0;
  double vmax_ = 10.0;
  std::optional<OmcColormap> omc_;
  int stops_per_band_ = 0;
};

/// Lookup table for `cmap` as used by render_scatter on `series`.
ColorLut make_lut(const ColormapSource& cmap, const TimeHeightSeries* series, const RenderSpec& spec);

/// Pixel of a data coordinate, origin top-left. x = round(u * (width - 1)).
std::pair<int, int> to_pixel(double time, double height, const RenderSpec& spec);

/// Each unmasked record becomes a point_size square in its lookup color;
/// later rows overdraw earlier ones. No blending, no anti-aliasing.
Image render_scatter(const TimeHeightSeries& series, const ColormapSource& cmap, const RenderSpec& spec = {});

Image render_colorbar(const ColorLut& lut, const ColorbarSpec& spec = {});
Image render_colorbar(const ColormapSource& cmap, const ColorbarSpec& spec = {}, int lut_stops_per_band = 256,
                      std::optional<std::pair<double, double>> table_domain = std::nullopt);

/// Pixel offsets of the decade ticks along a colorbar of `length` pixels.
std::vector<int> colorbar_tick_positions(const ColorLut& lut, int length);

}  // namespace omc
