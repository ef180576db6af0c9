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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "omc/colormap.hpp"
#include "omc/image.hpp"
#include "omc/ingest.hpp"
#include "omc/metrics.hpp"
#include "omc/render.hpp"
#include "omc/table_io.hpp"

namespace omc::cli {

namespace {

/// Options shared by every command that resolves a colormap.
struct CmapOptions {
  std::string cmap = "omc";
  std::optional<int> e_min;
  std::optional<int> e_max;
  std::string mode = "mantissa-linear";
};

void add_cmap_options(CLI::App* cmd, CmapOptions& o, bool positional) {
  const char* help = "builtin name (omc, omc_sl, viridis, rainbow) or colormap file";
  if (positional) cmd->add_option("cmap", o.cmap, help)->required();
  else cmd->add_option("--cmap", o.cmap, help)->capture_default_str();
  cmd->add_option("--emin", o.e_min, "smallest decade exponent for builtin omc/omc_sl");
  cmd->add_option("--emax", o.e_max, "largest decade exponent for builtin omc/omc_sl");
  cmd->add_option("--mode", o.mode, "within-decade position: mantissa-linear or log-fraction")
      ->check(CLI::IsMember({"mantissa-linear", "log-fraction"}))
      ->capture_default_str();
}

bool is_builtin_omc(const std::string& name) { return name == "omc" || name == "omc_sl"; }

/// Resolves a builtin name or file. `span` supplies decades for builtin OMC
/// maps when no --emin/--emax were given.
ColormapSource resolve_cmap(const CmapOptions& o, std::optional<std::pair<int, int>> span = std::nullopt) {
  if (o.cmap == "viridis") return viridis_table();
  if (o.cmap == "rainbow") return rainbow_table(256);
  if (is_builtin_omc(o.cmap)) {
    if (o.e_min && o.e_max) span = std::pair{*o.e_min, *o.e_max};
    if (!span) throw Error(ErrorCode::InvalidArgument, "builtin '" + o.cmap + "' needs --emin and --emax");
    BuildOptions options;
    options.mode = parse_within_band_mode(o.mode);
    return o.cmap == "omc" ? build_omc(span->first, span->second, options)
                           : build_omc_sl(span->first, span->second, options);
  }
  ColormapFile file = read_colormap_file(o.cmap);
  if (file.omc) return std::move(*file.omc);
  return std::move(file.table);
}

/// Option combinations that can never run. Empty when the options are consistent.
std::string conflict(const CmapOptions& o, const std::optional<double>& vmin, const std::optional<double>& vmax) {
  if ((o.e_min || o.e_max) && !is_builtin_omc(o.cmap)) return "--emin/--emax only apply to builtin omc and omc_sl";
  if (o.e_min.has_value() != o.e_max.has_value()) return "--emin and --emax go together";
  if (vmin && is_builtin_omc(o.cmap)) return "--vmin/--vmax apply to table colormaps only";
  if (vmin && !(*vmin > 0.0 && *vmin < *vmax)) return "--vmin/--vmax need 0 < vmin < vmax";
  return {};
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

double parse_positive(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw Error(ErrorCode::InvalidArgument, "not a number: '" + text + "'");
  if (!std::isfinite(v)) throw Error(ErrorCode::NotFinite, "value '" + text + "' is not finite");
  if (v <= 0.0) throw Error(ErrorCode::NonPositiveValue, "value " + text + " must be > 0");
  return v;
}

std::string hex(Rgb8 c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

void print_boundaries(std::ostream& out, const OmcColormap& cmap, DeltaEMetric metric) {
  const auto report = boundary_report(cmap, metric);
  const char* name = metric == DeltaEMetric::CIE76 ? "dE76" : "dE2000";
  double lo = report.empty() ? 0.0 : report.front().delta_e;
  double hi = lo;
  for (const BoundaryEntry& b : report) {
    out << "boundary " << cmap.e_min() + b.index << "|" << cmap.e_min() + b.index + 1 << ": " << name << " "
        << fixed(b.delta_e) << '\n';
    lo = std::min(lo, b.delta_e);
    hi = std::max(hi, b.delta_e);
  }
  out << "boundary " << name << " max " << fixed(hi) << " min " << fixed(lo) << " ratio " << fixed(hi / lo, 4)
      << '\n';
}

ColormapTable table_of(const ColormapSource& src, int samples_per_band) {
  if (const auto* omc = std::get_if<OmcColormap>(&src)) {
    return sample_table(*omc, omc->band_count() * samples_per_band);
  }
  return std::get<ColormapTable>(src);
}

void write_profile(const std::string& path, const std::string& text) { write_text_file(path, text); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order-of-magnitude colormaps: build, inspect, export and render", "omcmap"};
  app.set_config("--config", "", "read options from a TOML/INI file (flags override it)");
  bool dry_run = false;
  app.add_flag("--dry-run", dry_run, "print the effective configuration and exit");
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct an OMC or OMC_sl colormap file");
  int b_emin = 0, b_emax = 0, b_spb = 64;
  std::string b_variant = "omc", b_mode = "mantissa-linear", b_out;
  bool b_no_equalize = false, b_descending = false;
  build->add_option("--emin", b_emin, "smallest decade exponent")->required();
  build->add_option("--emax", b_emax, "largest decade exponent")->required();
  build->add_option("--variant", b_variant)->check(CLI::IsMember({"omc", "omc_sl"}))->capture_default_str();
  build->add_option("--mode", b_mode)->check(CLI::IsMember({"mantissa-linear", "log-fraction"}))->capture_default_str();
  build->add_option("--samples-per-band", b_spb, "stops per decade in the embedded table")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  build->add_flag("--no-equalize", b_no_equalize, "keep evenly spaced hue anchors");
  build->add_flag("--descending", b_descending, "first band runs light to dark");
  build->add_option("-o,--output", b_out, "output .cmap/.json file")->required();

  // render
  auto* render = app.add_subcommand("render", "draw a time-height scatterplot as PNG");
  CmapOptions r_cmap;
  std::string r_data, r_out, r_colorbar = "none";
  RenderSpec r_spec;
  std::optional<double> r_vmin, r_vmax;
  bool r_labels = false;
  char r_delim = ',';
  render->add_option("data", r_data, "input CSV with time,height,value columns")->required();
  add_cmap_options(render, r_cmap, false);
  render->add_option("--width", r_spec.width)->capture_default_str();
  render->add_option("--height", r_spec.height)->capture_default_str();
  render->add_option("--point-size", r_spec.point_size)->capture_default_str();
  render->add_option("--tmin", r_spec.x_range.min, "time axis start, hours")->capture_default_str();
  render->add_option("--tmax", r_spec.x_range.max, "time axis end, hours")->capture_default_str();
  render->add_option("--hmin", r_spec.y_range.min, "height axis start, km")->capture_default_str();
  render->add_option("--hmax", r_spec.y_range.max, "height axis end, km")->capture_default_str();
  render->add_option("--lut-stops-per-band", r_spec.lut_stops_per_band)->capture_default_str();
  auto* vmin_opt = render->add_option("--vmin", r_vmin, "log domain start for table colormaps");
  auto* vmax_opt = render->add_option("--vmax", r_vmax, "log domain end for table colormaps");
  vmin_opt->needs(vmax_opt);
  vmax_opt->needs(vmin_opt);
  render->add_option("--colorbar", r_colorbar)->check(CLI::IsMember({"none", "right", "below"}))->capture_default_str();
  render->add_flag("--labels", r_labels, "label colorbar ticks");
  render->add_option("--delimiter", r_delim)->capture_default_str();
  render->add_option("-o,--output", r_out, "output PNG")->required();

  // colorbar
  auto* colorbar = app.add_subcommand("colorbar", "draw a colorbar strip as PNG");
  CmapOptions c_cmap;
  ColorbarSpec c_spec;
  bool c_vertical = false;
  std::string c_out;
  std::optional<double> c_vmin, c_vmax;
  add_cmap_options(colorbar, c_cmap, false);
  colorbar->add_option("--length", c_spec.length)->capture_default_str();
  colorbar->add_option("--thickness", c_spec.thickness)->capture_default_str();
  colorbar->add_flag("--vertical", c_vertical);
  colorbar->add_flag("--labels", c_spec.labels);
  auto* cvmin = colorbar->add_option("--vmin", c_vmin, "log domain start for table colormaps");
  auto* cvmax = colorbar->add_option("--vmax", c_vmax, "log domain end for table colormaps");
  cvmin->needs(cvmax);
  cvmax->needs(cvmin);
  colorbar->add_option("-o,--output", c_out, "output PNG")->required();

  // profile
  auto* profile = app.add_subcommand("profile", "write a colormap diagnostic profile as CSV");
  CmapOptions p_cmap;
  std::string p_kind = "deltae", p_metric = "de76", p_out;
  int p_spb = 64;
  add_cmap_options(profile, p_cmap, false);
  profile->add_option("--kind", p_kind)
      ->check(CLI::IsMember({"deltae", "hsv", "boundary", "monotonicity"}))
      ->capture_default_str();
  profile->add_option("--metric", p_metric)->check(CLI::IsMember({"de76", "de2000"}))->capture_default_str();
  profile->add_option("--samples-per-band", p_spb)->check(CLI::PositiveNumber)->capture_default_str();
  profile->add_option("-o,--output", p_out, "output CSV")->required();

  // lookup
  auto* lookup_cmd = app.add_subcommand("lookup", "print the color of one value");
  CmapOptions l_cmap;
  std::string l_value;
  add_cmap_options(lookup_cmd, l_cmap, true);
  lookup_cmd->add_option("value", l_value, "positive value")->required();
  std::optional<double> l_vmin, l_vmax;
  auto* lvmin = lookup_cmd->add_option("--vmin", l_vmin, "log domain start for table colormaps");
  auto* lvmax = lookup_cmd->add_option("--vmax", l_vmax, "log domain end for table colormaps");
  lvmin->needs(lvmax);
  lvmax->needs(lvmin);

  // rangesize
  auto* rangesize = app.add_subcommand("rangesize", "decade-normalized width of a value range");
  std::string rs_low, rs_high;
  rangesize->add_option("low", rs_low)->required();
  rangesize->add_option("high", rs_high)->required();

  // export
  auto* export_cmd = app.add_subcommand("export", "write a colormap as a table (.txt/.csv native, .json)");
  CmapOptions e_cmap;
  std::string e_out;
  int e_spb = 64;
  add_cmap_options(export_cmd, e_cmap, false);
  export_cmd->add_option("--samples-per-band", e_spb)->check(CLI::PositiveNumber)->capture_default_str();
  export_cmd->add_option("-o,--output", e_out)->required();

  // import
  auto* import_cmd = app.add_subcommand("import", "validate a colormap table and optionally convert it");
  std::string i_path, i_out;
  import_cmd->add_option("path", i_path)->required();
  import_cmd->add_option("-o,--output", i_out, "re-export to this path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  std::string problem;
  if (*render) problem = conflict(r_cmap, r_vmin, r_vmax);
  else if (*colorbar) problem = conflict(c_cmap, c_vmin, c_vmax);
  else if (*profile) problem = conflict(p_cmap, std::nullopt, std::nullopt);
  else if (*lookup_cmd) problem = conflict(l_cmap, l_vmin, l_vmax);
  else if (*export_cmd) problem = conflict(e_cmap, std::nullopt, std::nullopt);
  if (!problem.empty()) {
    err << "error: " << problem << '\n';
    return kUsageError;
  }

  if (dry_run) {
    // Only the selected command, as a section that --config accepts back.
    const CLI::App* cmd = app.get_subcommands().front();
    out << '[' << cmd->get_name() << "]\n" << cmd->config_to_str(true, false);
    return 0;
  }

  try {
    if (*build) {
      BuildOptions options;
      options.mode = parse_within_band_mode(b_mode);
      options.equalize = !b_no_equalize;
      options.first_direction = b_descending ? Direction::Descending : Direction::Ascending;
      const OmcColormap cmap = b_variant == "omc" ? build_omc(b_emin, b_emax, options) : build_omc_sl(b_emin, b_emax, options);
      const ColormapTable table = sample_table(cmap, cmap.band_count() * b_spb);
      write_colormap_file(cmap, table, b_out);
      out << "built " << b_variant << ": " << cmap.band_count() << " bands, exponents " << cmap.e_min() << ".."
          << cmap.e_max() << ", mode " << b_mode << '\n';
      for (const ExponentBand& b : cmap.bands()) {
        out << "band " << b.exponent << ": hue " << fixed(b.hue_anchor, 2) << ' ' << to_string(b.direction) << '\n';
      }
      if (cmap.variant() == Variant::OmcSmoothedLightness) out << "directions alternate band to band\n";
      print_boundaries(out, cmap, DeltaEMetric::CIE76);
      out << "wrote " << b_out << '\n';
    } else if (*render) {
      CsvOptions csv;
      csv.delimiter = r_delim;
      csv.time_range = r_spec.x_range;
      csv.height_range = r_spec.y_range;
      const TimeHeightSeries series = parse_csv(r_data, csv);
      auto span = observed_exponent_span(series);
      if (span.first == span.second) span.second += 1;
      const ColormapSource cmap = resolve_cmap(r_cmap, span);
      if (r_vmin) {
        if (std::holds_alternative<OmcColormap>(cmap)) {
          throw Error(ErrorCode::InvalidArgument, "--vmin/--vmax apply to table colormaps only");
        }
        r_spec.table_domain = std::pair{*r_vmin, *r_vmax};
      }
      r_spec.colorbar = r_colorbar == "right"   ? ColorbarPlacement::Right
                        : r_colorbar == "below" ? ColorbarPlacement::Below
                                                : ColorbarPlacement::None;
      r_spec.colorbar_style.labels = r_labels;
      const Image img = render_scatter(series, cmap, r_spec);
      write_png(img, r_out);
      out << "rows " << series.size() << ", drawn " << series.valid_count() << ", masked " << series.masked_count();
      for (MaskReason reason : {MaskReason::Missing, MaskReason::NonPositive, MaskReason::NonFinite, MaskReason::OutOfBounds}) {
        if (series.count(reason)) out << ", " << to_string(reason) << ' ' << series.count(reason);
      }
      out << '\n' << "wrote " << r_out << " (" << img.width() << "x" << img.height() << ")\n";
    } else if (*colorbar) {
      c_spec.orientation = c_vertical ? Orientation::Vertical : Orientation::Horizontal;
      std::optional<std::pair<double, double>> domain;
      if (c_vmin) domain = std::pair{*c_vmin, *c_vmax};
      const Image img = render_colorbar(resolve_cmap(c_cmap), c_spec, 256, domain);
      write_png(img, c_out);
      out << "wrote " << c_out << " (" << img.width() << "x" << img.height() << ")\n";
    } else if (*profile) {
      const ColormapSource cmap = resolve_cmap(p_cmap);
      const DeltaEMetric metric = p_metric == "de76" ? DeltaEMetric::CIE76 : DeltaEMetric::CIEDE2000;
      const auto* omc = std::get_if<OmcColormap>(&cmap);
      if ((p_kind == "boundary" || p_kind == "monotonicity") && !omc) {
        throw Error(ErrorCode::InvalidArgument, "--kind " + p_kind + " needs an OMC colormap");
      }
      if (p_kind == "deltae") {
        const ProfileSeries s = delta_e_profile(table_of(cmap, p_spb), metric);
        write_profile(p_out, to_csv(s, p_metric));
        const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
        out << "steps " << s.size() << ", " << p_metric << " max " << fixed(*hi) << " min " << fixed(*lo) << '\n';
      } else if (p_kind == "hsv") {
        const HsvProfile p = hsv_profile(table_of(cmap, p_spb));
        std::ostringstream csv;
        csv << "position,h,s,v\n" << std::setprecision(10);
        for (std::size_t i = 0; i < p.hue.size(); ++i) {
          csv << p.hue.positions[i] << ',' << p.hue.values[i] << ',' << p.saturation.values[i] << ','
              << p.value.values[i] << '\n';
        }
        write_profile(p_out, csv.str());
        out << "stops " << p.hue.size() << '\n';
      } else if (p_kind == "boundary") {
        std::ostringstream csv;
        csv << "boundary,lower_exponent,upper_exponent," << p_metric << '\n' << std::setprecision(10);
        for (const BoundaryEntry& b : boundary_report(*omc, metric)) {
          csv << b.index << ',' << omc->e_min() + b.index << ',' << omc->e_min() + b.index + 1 << ',' << b.delta_e << '\n';
        }
        write_profile(p_out, csv.str());
        print_boundaries(out, *omc, metric);
      } else {
        std::ostringstream csv;
        csv << "exponent,monotone,direction,min_step\n" << std::setprecision(10);
        bool all = true;
        for (const BandMonotonicity& m : monotonicity_check(*omc)) {
          csv << m.exponent << ',' << (m.monotone ? "true" : "false") << ',' << to_string(m.direction) << ','
              << m.min_step << '\n';
          all = all && m.monotone;
        }
        write_profile(p_out, csv.str());
        out << "bands " << omc->band_count() << ", all monotone " << (all ? "yes" : "no") << '\n';
      }
      out << "wrote " << p_out << '\n';
    } else if (*lookup_cmd) {
      const double v = parse_positive(l_value);
      const ColormapSource cmap = resolve_cmap(l_cmap);
      Clamped<Rgb8> c{};
      if (const auto* omc = std::get_if<OmcColormap>(&cmap)) {
        const Clamped<Rgb> rgb = lookup(*omc, v);
        c = {to_rgb8(rgb.value), rgb.clamped};
      } else {
        if (!l_vmin) throw Error(ErrorCode::InvalidArgument, "table colormaps need --vmin and --vmax");
        c = ColorLut::from_table(std::get<ColormapTable>(cmap), *l_vmin, *l_vmax).color(v);
      }
      out << int(c.value.r) << ',' << int(c.value.g) << ',' << int(c.value.b) << ' ' << hex(c.value)
          << (c.clamped ? " (out of range, clamped)" : "") << '\n';
    } else if (*rangesize) {
      const RangeAnswer answer{decompose(parse_positive(rs_low)), decompose(parse_positive(rs_high))};
      out << fixed(range_size(answer), 6) << '\n';
    } else if (*export_cmd) {
      const ColormapTable table = table_of(resolve_cmap(e_cmap), e_spb);
      export_table(table, e_out);
      out << "wrote " << table.size() << " stops to " << e_out << '\n';
    } else if (*import_cmd) {
      const ColormapTable table = import_table(i_path);
      out << "imported '" << table.name << "': " << table.size() << " stops, scale " << to_string(table.scale_hint)
          << '\n';
      if (!i_out.empty()) {
        export_table(table, i_out);
        out << "wrote " << i_out << '\n';
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace omc::cli
