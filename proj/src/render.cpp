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

#include "omc/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace omc {

namespace {

constexpr int kGap = 16;

// 3x5 glyphs, one row per entry, bit 2 = leftmost column.
constexpr std::array<std::array<std::uint8_t, 5>, 11> kGlyphs{{
    {7, 5, 5, 5, 7},  // 0
    {2, 6, 2, 2, 7},  // 1
    {7, 1, 7, 4, 7},  // 2
    {7, 1, 7, 1, 7},  // 3
    {5, 5, 7, 1, 1},  // 4
    {7, 4, 7, 1, 7},  // 5
    {7, 4, 7, 5, 7},  // 6
    {7, 1, 1, 1, 1},  // 7
    {7, 5, 7, 5, 7},  // 8
    {7, 5, 7, 1, 7},  // 9
    {0, 0, 7, 0, 0},  // -
}};
constexpr int kGlyphWidth = 3;
constexpr int kGlyphHeight = 5;
constexpr int kLabelHeight = kGlyphHeight + 3;  // exponent raised by 3 rows

void draw_glyph(Image& img, char c, int x, int y, Rgb8 color) {
  const std::size_t g = c == '-' ? 10 : static_cast<std::size_t>(c - '0');
  for (int row = 0; row < kGlyphHeight; ++row) {
    for (int col = 0; col < kGlyphWidth; ++col) {
      if ((kGlyphs[g][static_cast<std::size_t>(row)] >> (kGlyphWidth - 1 - col)) & 1) {
        if (img.contains(x + col, y + row)) img.at(x + col, y + row) = color;
      }
    }
  }
}

/// Width in pixels of the "10^e" label.
int label_width(int exponent) {
  const std::string e = std::to_string(exponent);
  return 2 * (kGlyphWidth + 1) + static_cast<int>(e.size()) * (kGlyphWidth + 1) - 1;
}

/// Draws "10" with the exponent raised, top-left at (x, y).
void draw_label(Image& img, int exponent, int x, int y, Rgb8 color) {
  draw_glyph(img, '1', x, y + 3, color);
  draw_glyph(img, '0', x + kGlyphWidth + 1, y + 3, color);
  int cx = x + 2 * (kGlyphWidth + 1);
  for (char c : std::to_string(exponent)) {
    draw_glyph(img, c, cx, y, color);
    cx += kGlyphWidth + 1;
  }
}

int max_label_width(const std::vector<int>& ticks) {
  int w = 0;
  for (int e : ticks) w = std::max(w, label_width(e));
  return w;
}

}  // namespace

void validate(const RenderSpec& spec) {
  if (spec.width < 16 || spec.height < 16) throw Error(ErrorCode::InvalidArgument, "image must be at least 16x16");
  if (spec.point_size < 1) throw Error(ErrorCode::InvalidArgument, "point size must be >= 1");
  if (!(spec.x_range.min < spec.x_range.max) || !(spec.y_range.min < spec.y_range.max)) {
    throw Error(ErrorCode::InvalidArgument, "axis ranges must be increasing");
  }
  if (spec.lut_stops_per_band < 1) throw Error(ErrorCode::InvalidArgument, "lut_stops_per_band must be >= 1");
}

ColorLut ColorLut::from_omc(const OmcColormap& cmap, int stops_per_band) {
  if (stops_per_band < 1) throw Error(ErrorCode::InvalidArgument, "stops_per_band must be >= 1");
  ColorLut lut;
  const ColormapTable table = sample_table(cmap, cmap.band_count() * stops_per_band + 1);
  lut.colors_.reserve(table.stops.size());
  for (const Rgb& c : table.stops) lut.colors_.push_back(to_rgb8(c));
  lut.vmin_ = cmap.domain_min();
  lut.vmax_ = cmap.domain_max();
  lut.omc_ = cmap;
  lut.stops_per_band_ = stops_per_band;
  return lut;
}

ColorLut ColorLut::from_table(const ColormapTable& table, double vmin, double vmax) {
  validate(table);
  log_normalize(vmin, vmin, vmax);  // domain check
  ColorLut lut;
  lut.colors_.reserve(table.stops.size());
  for (const Rgb& c : table.stops) lut.colors_.push_back(to_rgb8(c));
  lut.vmin_ = vmin;
  lut.vmax_ = vmax;
  return lut;
}

Clamped<Rgb8> ColorLut::color(double v) const {
  if (omc_) {
    const BandPosition pos = band_fraction(v, WithinBandMode::LogFraction);
    if (pos.exponent < omc_->e_min()) return {colors_.front(), true};
    if (pos.exponent > omc_->e_max()) return {colors_.back(), true};
    const int step = std::min(stops_per_band_ - 1, static_cast<int>(std::floor(pos.t * stops_per_band_)));
    const auto index = static_cast<std::size_t>((pos.exponent - omc_->e_min()) * stops_per_band_ + step);
    return {colors_[index], false};
  }
  const Clamped<double> t = log_normalize(v, vmin_, vmax_);
  const auto n = static_cast<int>(colors_.size());
  const int index = std::min(n - 1, static_cast<int>(std::floor(t.value * n)));
  return {colors_[static_cast<std::size_t>(index)], t.clamped};
}

std::vector<int> ColorLut::decade_ticks() const {
  std::vector<int> ticks;
  const int first = static_cast<int>(std::floor(std::log10(vmin_))) - 1;
  const int last = static_cast<int>(std::ceil(std::log10(vmax_))) + 1;
  for (int e = first; e <= last; ++e) {
    const double p = pow10(e);
    if (p >= vmin_ && p <= vmax_) ticks.push_back(e);
  }
  return ticks;
}

ColorLut make_lut(const ColormapSource& cmap, const TimeHeightSeries* series, const RenderSpec& spec) {
  if (const auto* omc = std::get_if<OmcColormap>(&cmap)) return ColorLut::from_omc(*omc, spec.lut_stops_per_band);

  const auto& table = std::get<ColormapTable>(cmap);
  std::pair<double, double> domain{1.0, 10.0};
  if (spec.table_domain) {
    domain = *spec.table_domain;
  } else if (series) {
    domain = series->value_range();
    if (!(domain.first < domain.second)) {
      domain = {domain.first / std::sqrt(10.0), domain.first * std::sqrt(10.0)};
    }
  }
  return ColorLut::from_table(table, domain.first, domain.second);
}

std::pair<int, int> to_pixel(double time, double height, const RenderSpec& spec) {
  const double u = (time - spec.x_range.min) / (spec.x_range.max - spec.x_range.min);
  const double w = (height - spec.y_range.min) / (spec.y_range.max - spec.y_range.min);
  const int x = static_cast<int>(std::lround(u * (spec.width - 1)));
  const int y_up = static_cast<int>(std::lround(w * (spec.height - 1)));
  return {x, spec.height - 1 - y_up};
}

std::vector<int> colorbar_tick_positions(const ColorLut& lut, int length) {
  const double lo = std::log10(lut.vmin());
  const double hi = std::log10(lut.vmax());
  std::vector<int> out;
  for (int e : lut.decade_ticks()) {
    out.push_back(static_cast<int>(std::lround((e - lo) / (hi - lo) * (length - 1))));
  }
  return out;
}

Image render_colorbar(const ColorLut& lut, const ColorbarSpec& spec) {
  if (spec.length < 256) throw Error(ErrorCode::InvalidArgument, "colorbar length must be >= 256");
  if (spec.thickness < 1 || spec.tick_length < 0) throw Error(ErrorCode::InvalidArgument, "bad colorbar size");

  const std::vector<int> ticks = lut.decade_ticks();
  const std::vector<int> tick_pos = colorbar_tick_positions(lut, spec.length);
  const bool horizontal = spec.orientation == Orientation::Horizontal;
  const int label_extent = spec.labels ? (horizontal ? kLabelHeight : max_label_width(ticks)) + 2 : 0;
  const int across = spec.thickness + spec.tick_length + label_extent;
  Image img = horizontal ? Image(spec.length, across, spec.background) : Image(across, spec.length, spec.background);

  const double lo = std::log10(lut.vmin());
  const double hi = std::log10(lut.vmax());
  for (int p = 0; p < spec.length; ++p) {
    const double u = (p + 0.5) / spec.length;
    const Rgb8 c = lut.color(std::pow(10.0, lo + u * (hi - lo))).value;
    if (horizontal) img.fill_rect(p, 0, 1, spec.thickness, c);
    else img.fill_rect(0, spec.length - 1 - p, spec.thickness, 1, c);
  }

  for (std::size_t i = 0; i < ticks.size(); ++i) {
    const int p = tick_pos[i];
    if (horizontal) {
      img.fill_rect(p, spec.thickness, 1, spec.tick_length, spec.tick_color);
      if (spec.labels) {
        const int w = label_width(ticks[i]);
        const int x = std::clamp(p - w / 2, 0, spec.length - w);
        draw_label(img, ticks[i], x, spec.thickness + spec.tick_length + 2, spec.tick_color);
      }
    } else {
      const int row = spec.length - 1 - p;
      img.fill_rect(spec.thickness, row, spec.tick_length, 1, spec.tick_color);
      if (spec.labels) {
        const int y = std::clamp(row - kLabelHeight / 2, 0, spec.length - kLabelHeight);
        draw_label(img, ticks[i], spec.thickness + spec.tick_length + 2, y, spec.tick_color);
      }
    }
  }
  return img;
}

Image render_colorbar(const ColormapSource& cmap, const ColorbarSpec& spec, int lut_stops_per_band,
                      std::optional<std::pair<double, double>> table_domain) {
  RenderSpec rs;
  rs.lut_stops_per_band = lut_stops_per_band;
  rs.table_domain = table_domain;
  return render_colorbar(make_lut(cmap, nullptr, rs), spec);
}

Image render_scatter(const TimeHeightSeries& series, const ColormapSource& cmap, const RenderSpec& spec) {
  validate(spec);
  if (series.valid_count() == 0) throw Error(ErrorCode::EmptyPlot, "no unmasked records to draw");

  const ColorLut lut = make_lut(cmap, &series, spec);
  const bool explicit_domain = std::holds_alternative<OmcColormap>(cmap) || spec.table_domain.has_value();
  if (explicit_domain) {
    bool any_inside = false;
    for (std::size_t i = 0; i < series.size() && !any_inside; ++i) {
      if (!series.valid(i)) continue;
      any_inside = !lut.color(series.value[i]).clamped;
    }
    if (!any_inside) throw Error(ErrorCode::DomainMismatch, "colormap domain excludes every data value");
  }

  Image panel(spec.width, spec.height, spec.background);
  const int lo = -(spec.point_size - 1) / 2;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!series.valid(i)) continue;
    const auto [x, y] = to_pixel(series.time[i], series.height[i], spec);
    panel.fill_rect(x + lo, y + lo, spec.point_size, spec.point_size, lut.color(series.value[i]).value);
  }

  if (spec.colorbar == ColorbarPlacement::None) return panel;

  ColorbarSpec bar = spec.colorbar_style;
  bar.background = spec.background;
  if (spec.colorbar == ColorbarPlacement::Right) {
    bar.orientation = Orientation::Vertical;
    bar.length = std::max(256, spec.height);
    const Image strip = render_colorbar(lut, bar);
    Image out(spec.width + kGap + strip.width(), std::max(spec.height, strip.height()), spec.background);
    out.blit(panel, 0, 0);
    out.blit(strip, spec.width + kGap, 0);
    return out;
  }
  bar.orientation = Orientation::Horizontal;
  bar.length = std::max(256, spec.width);
  const Image strip = render_colorbar(lut, bar);
  Image out(std::max(spec.width, strip.width()), spec.height + kGap + strip.height(), spec.background);
  out.blit(panel, 0, 0);
  out.blit(strip, 0, spec.height + kGap);
  return out;
}

}  // namespace omc
