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
#include <filesystem>
#include <set>

#include "omc/render.hpp"
#include "omc/synthetic.hpp"

using namespace omc;

namespace {

const OmcColormap& iwc_omc() {
  static const OmcColormap cmap = build_omc(-8, -2);
  return cmap;
}

TimeHeightSeries series_of(std::vector<std::array<double, 3>> rows) {
  TimeHeightSeries s;
  for (const auto& [t, h, v] : rows) {
    s.time.push_back(t);
    s.height.push_back(h);
    s.value.push_back(v);
    s.mask.push_back(v > 0 ? MaskReason::Valid : MaskReason::NonPositive);
  }
  return s;
}

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::IoError;
}

constexpr Rgb8 kWhite{255, 255, 255};

/// Bounding box of non-background pixels: x0, y0, x1, y1 inclusive.
std::array<int, 4> drawn_box(const Image& img) {
  std::array<int, 4> box{img.width(), img.height(), -1, -1};
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (img.at(x, y) != kWhite) box = {std::min(box[0], x), std::min(box[1], y), std::max(box[2], x), std::max(box[3], y)};
  return box;
}

}  // namespace

TEST_CASE("to_pixel: axis midpoints and corners") {
  RenderSpec spec;
  CHECK(to_pixel(12.0, 6.0, spec) == std::pair{645, 249});
  CHECK(to_pixel(0.0, 0.0, spec) == std::pair{0, 499});
  CHECK(to_pixel(24.0, 12.0, spec) == std::pair{1290, 0});
}

TEST_CASE("render_scatter: single point lands at the panel centre") {
  auto img = render_scatter(series_of({{12.0, 6.0, 3e-5}}), iwc_omc());
  REQUIRE(img.width() == 1291);
  REQUIRE(img.height() == 500);
  auto [x0, y0, x1, y1] = drawn_box(img);
  CHECK(x1 - x0 + 1 == 3);
  CHECK(y1 - y0 + 1 == 3);
  const double cx = (x0 + x1) / 2.0;
  const double cy_from_bottom = img.height() - 1 - (y0 + y1) / 2.0;
  CHECK(std::abs(cx - 645.0) <= 1.0);
  CHECK(std::abs(cy_from_bottom - 250.0) <= 1.0);
  CHECK(img.at(645, 249) == ColorLut::from_omc(iwc_omc(), 256).color(3e-5).value);
}

TEST_CASE("render_scatter: masked rows are skipped and later rows overdraw") {
  auto img = render_scatter(series_of({{6, 3, 1e-8}, {6, 3, 5e-3}, {18, 9, -1.0}}), iwc_omc());
  auto lut = ColorLut::from_omc(iwc_omc(), 256);
  auto [x, y] = to_pixel(6, 3, RenderSpec{});
  CHECK(img.at(x, y) == lut.color(5e-3).value);
  auto [mx, my] = to_pixel(18, 9, RenderSpec{});
  CHECK(img.at(mx, my) == kWhite);
}

TEST_CASE("render_scatter: deterministic bytes") {
  auto day = synthetic_day(5000);
  auto a = encode_png(render_scatter(day, iwc_omc()));
  auto b = encode_png(render_scatter(day, iwc_omc()));
  CHECK(a == b);
}

TEST_CASE("render_scatter: every drawn pixel is a sampled colormap color") {
  auto day = synthetic_day(20000, 5);
  auto img = render_scatter(day, iwc_omc());
  std::set<Rgb8> allowed;
  for (const Rgb& c : sample_table(iwc_omc(), 7 * 256 + 1).stops) allowed.insert(to_rgb8(c));
  std::size_t drawn = 0;
  for (const Rgb8& p : img.pixels()) {
    if (p == kWhite) continue;
    ++drawn;
    CHECK(allowed.count(p) == 1);
  }
  CHECK(drawn > 10000);
}

TEST_CASE("ColorLut: OMC stops equal the sampled table") {
  auto lut = ColorLut::from_omc(iwc_omc(), 256);
  auto table = sample_table(iwc_omc(), 7 * 256 + 1);
  REQUIRE(lut.colors().size() == table.stops.size());
  for (std::size_t i = 0; i < table.stops.size(); ++i) CHECK(lut.colors()[i] == to_rgb8(table.stops[i]));
  CHECK(lut.decade_ticks() == std::vector<int>{-8, -7, -6, -5, -4, -3, -2, -1});
  // Each value stays in its own decade: just below 1e-5 is the top of band -6.
  CHECK(lut.color(9.99999e-6).value == to_rgb8(table.stops[3 * 256 - 1]));
  CHECK(lut.color(1e-5).value == to_rgb8(table.stops[3 * 256]));
  CHECK(lut.color(1e-9).clamped);
  CHECK(lut.color(1.0).clamped);
}

TEST_CASE("render_scatter: table colormap spans the observed values") {
  auto viridis = viridis_table();
  auto img = render_scatter(series_of({{2, 2, 1e-6}, {20, 10, 1e-3}}), viridis);
  auto [x0, y0] = to_pixel(2, 2, RenderSpec{});
  auto [x1, y1] = to_pixel(20, 10, RenderSpec{});
  CHECK(img.at(x0, y0) == to_rgb8(viridis.stops.front()));
  CHECK(img.at(x1, y1) == to_rgb8(viridis.stops.back()));
}

TEST_CASE("render_scatter: empty plot and domain mismatch") {
  auto masked = series_of({{1, 1, -1.0}, {2, 2, 0.0}});
  CHECK(error_of([&] { render_scatter(masked, iwc_omc()); }) == ErrorCode::EmptyPlot);
  auto high = series_of({{1, 1, 10.0}, {2, 2, 300.0}});
  CHECK(error_of([&] { render_scatter(high, iwc_omc()); }) == ErrorCode::DomainMismatch);
  RenderSpec spec;
  spec.table_domain = std::pair{1e-3, 1e-1};
  CHECK(error_of([&] { render_scatter(series_of({{1, 1, 1e-6}}), viridis_table(), spec); }) ==
        ErrorCode::DomainMismatch);
  // One value inside is enough.
  CHECK_NOTHROW(render_scatter(series_of({{1, 1, 1e-6}, {2, 2, 1e-2}}), viridis_table(), spec));
}

TEST_CASE("RenderSpec: invariants") {
  RenderSpec spec;
  spec.width = 15;
  CHECK(error_of([&] { validate(spec); }) == ErrorCode::InvalidArgument);
  spec = {};
  spec.point_size = 0;
  CHECK(error_of([&] { validate(spec); }) == ErrorCode::InvalidArgument);
  spec = {};
  spec.x_range = {5, 5};
  CHECK(error_of([&] { validate(spec); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("render_colorbar: OMC strip has seven hue segments and eight ticks") {
  ColorbarSpec spec;
  auto bar = render_colorbar(ColormapSource{iwc_omc()}, spec);
  REQUIRE(bar.width() == 512);
  int jumps = 0;
  for (int x = 1; x < bar.width(); ++x)
    if (delta_e_76(srgb_to_lab(from_rgb8(bar.at(x - 1, 0))), srgb_to_lab(from_rgb8(bar.at(x, 0)))) > 20.0) ++jumps;
  CHECK(jumps == 6);
  int ticks = 0;
  for (int x = 0; x < bar.width(); ++x)
    if (bar.at(x, spec.thickness) == spec.tick_color) ++ticks;
  CHECK(ticks == 8);
  CHECK(colorbar_tick_positions(ColorLut::from_omc(iwc_omc(), 256), 512).front() == 0);
  CHECK(colorbar_tick_positions(ColorLut::from_omc(iwc_omc(), 256), 512).back() == 511);
}

TEST_CASE("render_colorbar: viridis strip is smooth") {
  auto bar = render_colorbar(ColormapSource{viridis_table()}, {}, 256, std::pair{1e-6, 1e-2});
  for (int x = 1; x < bar.width(); ++x)
    CHECK(delta_e_76(srgb_to_lab(from_rgb8(bar.at(x - 1, 0))), srgb_to_lab(from_rgb8(bar.at(x, 0)))) < 3.0);
}

TEST_CASE("render_colorbar: smoothed variant alternates lightness slope") {
  auto sl = build_omc_sl(-8, -2);
  ColorbarSpec spec;
  spec.length = 700;  // 100 px per decade
  auto bar = render_colorbar(ColormapSource{sl}, spec);
  for (int seg = 0; seg < 7; ++seg) {
    double l0 = srgb_to_lab(from_rgb8(bar.at(seg * 100 + 10, 0))).L();
    double l1 = srgb_to_lab(from_rgb8(bar.at(seg * 100 + 90, 0))).L();
    CAPTURE(seg);
    CHECK((seg % 2 == 0 ? l1 > l0 : l1 < l0));
  }
}

TEST_CASE("render_colorbar: vertical orientation, labels and size checks") {
  ColorbarSpec spec;
  spec.orientation = Orientation::Vertical;
  spec.labels = true;
  auto bar = render_colorbar(ColormapSource{iwc_omc()}, spec);
  CHECK(bar.height() == 512);
  CHECK(bar.width() > spec.thickness + spec.tick_length);
  // Pixels sample at their centres; the lowest value sits at the bottom.
  auto lut = ColorLut::from_omc(iwc_omc(), 256);
  CHECK(bar.at(0, 511) == lut.color(std::pow(10.0, -8.0 + 7.0 * 0.5 / 512)).value);
  CHECK(bar.at(0, 0) == lut.color(std::pow(10.0, -1.0 - 7.0 * 0.5 / 512)).value);
  spec.length = 100;
  CHECK(error_of([&] { render_colorbar(ColormapSource{iwc_omc()}, spec); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("render_scatter: colorbar placement grows the canvas") {
  RenderSpec spec;
  spec.colorbar = ColorbarPlacement::Right;
  auto right = render_scatter(series_of({{12, 6, 1e-4}}), iwc_omc(), spec);
  CHECK(right.width() > 1291);
  CHECK(right.height() == 500);
  spec.colorbar = ColorbarPlacement::Below;
  auto below = render_scatter(series_of({{12, 6, 1e-4}}), iwc_omc(), spec);
  CHECK(below.width() == 1291);
  CHECK(below.height() > 500);
}

TEST_CASE("png: lossless, byte-stable, rejects empty images") {
  Image img(37, 19, {10, 20, 30});
  img.fill_rect(5, 5, 10, 4, {200, 100, 0});
  img.at(36, 18) = {1, 2, 3};
  auto bytes = encode_png(img);
  CHECK(bytes == encode_png(img));
  CHECK(decode_png(bytes) == img);

  auto dir = std::filesystem::temp_directory_path() / "omc_test_render";
  std::filesystem::create_directories(dir);
  write_png(img, dir / "a.png");
  write_png(img, dir / "b.png");
  CHECK(read_png(dir / "a.png") == img);
  CHECK(encode_png(read_png(dir / "b.png")) == bytes);

  CHECK(error_of([] { encode_png(Image()); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { decode_png({1, 2, 3}); }) == ErrorCode::IoError);
  CHECK(error_of([&] { write_png(img, dir / "missing_dir" / "x.png"); }) == ErrorCode::IoError);
}
