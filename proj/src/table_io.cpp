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

#include "omc/table_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <sstream>

namespace omc {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view s, std::size_t line) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) parse_fail(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

void apply_metadata(ColormapTable& table, std::string_view key, std::string_view value, std::size_t line) {
  try {
    if (key == "name") table.name = std::string(value);
    else if (key == "scale_hint") table.scale_hint = parse_scale_hint(value);
    else if (key == "variant") table.variant = parse_variant(value);
    else if (key == "e_min") table.e_min = parse_int(value, line);
    else if (key == "e_max") table.e_max = parse_int(value, line);
    else if (key == "within_band_mode") table.within_band_mode = parse_within_band_mode(value);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    parse_fail(line, e.what());
  }
}

json table_fields(const ColormapTable& table) {
  json j;
  j["name"] = table.name;
  j["scale_hint"] = std::string(to_string(table.scale_hint));
  j["variant"] = table.variant ? json(std::string(to_string(*table.variant))) : json(nullptr);
  j["e_min"] = table.e_min ? json(*table.e_min) : json(nullptr);
  j["e_max"] = table.e_max ? json(*table.e_max) : json(nullptr);
  j["within_band_mode"] = table.within_band_mode ? json(std::string(to_string(*table.within_band_mode))) : json(nullptr);
  json stops = json::array();
  for (const Rgb& c : table.stops) stops.push_back({c.r(), c.g(), c.b()});
  j["stops"] = std::move(stops);
  return j;
}

json lab_json(const Lab& c) { return {c.L(), c.a(), c.b()}; }

Lab lab_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::ParseError, "Lab triple must be [L, a, b]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ColormapTable table_from_json(const json& j) {
  ColormapTable table;
  table.name = j.value("name", std::string("imported"));
  if (j.contains("scale_hint") && j["scale_hint"].is_string()) {
    table.scale_hint = parse_scale_hint(j["scale_hint"].get<std::string>());
  }
  if (j.contains("variant") && j["variant"].is_string()) table.variant = parse_variant(j["variant"].get<std::string>());
  if (j.contains("e_min") && j["e_min"].is_number_integer()) table.e_min = j["e_min"].get<int>();
  if (j.contains("e_max") && j["e_max"].is_number_integer()) table.e_max = j["e_max"].get<int>();
  if (j.contains("within_band_mode") && j["within_band_mode"].is_string()) {
    table.within_band_mode = parse_within_band_mode(j["within_band_mode"].get<std::string>());
  }
  if (!j.contains("stops") || !j["stops"].is_array()) throw Error(ErrorCode::ParseError, "missing 'stops' array");
  for (const json& s : j["stops"]) {
    if (!s.is_array() || s.size() != 3) throw Error(ErrorCode::ParseError, "each stop must be [r, g, b]");
    table.stops.emplace_back(s[0].get<double>(), s[1].get<double>(), s[2].get<double>());
  }
  try {
    validate(table);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return table;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

TableFormat format_for_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".txt" || ext == ".csv" || ext == ".rgb") return TableFormat::Native;
  if (ext == ".json" || ext == ".cmap") return TableFormat::Json;
  throw Error(ErrorCode::UnsupportedFormat, "cannot infer colormap format from '" + path.string() + "'");
}

std::string to_native_text(const ColormapTable& table) {
  validate(table);
  std::ostringstream os;
  os << "# name: " << table.name << '\n';
  os << "# scale_hint: " << to_string(table.scale_hint) << '\n';
  if (table.variant) os << "# variant: " << to_string(*table.variant) << '\n';
  if (table.e_min) os << "# e_min: " << *table.e_min << '\n';
  if (table.e_max) os << "# e_max: " << *table.e_max << '\n';
  if (table.within_band_mode) os << "# within_band_mode: " << to_string(*table.within_band_mode) << '\n';
  for (const Rgb& c : table.stops) {
    const Rgb8 q = to_rgb8(c);
    os << int(q.r) << ',' << int(q.g) << ',' << int(q.b) << '\n';
  }
  return os.str();
}

ColormapTable parse_native_text(std::string_view text, std::string default_name) {
  ColormapTable table;
  table.name = std::move(default_name);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      const auto colon = body.find(':');
      if (colon != std::string_view::npos) {
        apply_metadata(table, trim(body.substr(0, colon)), trim(body.substr(colon + 1)), line_no);
      }
      continue;
    }

    std::array<int, 3> rgb{};
    std::size_t start = 0;
    for (int k = 0; k < 3; ++k) {
      const auto comma = line.find(',', start);
      if ((k < 2) == (comma == std::string_view::npos)) parse_fail(line_no, "expected exactly three fields R,G,B");
      rgb[static_cast<std::size_t>(k)] = parse_int(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start), line_no);
      if (rgb[static_cast<std::size_t>(k)] < 0 || rgb[static_cast<std::size_t>(k)] > 255) {
        parse_fail(line_no, "channel outside 0..255");
      }
      start = comma + 1;
    }
    table.stops.push_back(from_rgb8({static_cast<std::uint8_t>(rgb[0]), static_cast<std::uint8_t>(rgb[1]),
                                     static_cast<std::uint8_t>(rgb[2])}));
  }
  if (table.stops.size() < 2) {
    parse_fail(line_no, "a colormap needs at least 2 stops, found " + std::to_string(table.stops.size()));
  }
  return table;
}

std::string to_json_text(const ColormapTable& table) {
  validate(table);
  return table_fields(table).dump(2) + '\n';
}

ColormapTable parse_json_text(std::string_view text) { return table_from_json(parse_json(text)); }

std::string to_json_text(const OmcColormap& cmap, const ColormapTable& table) {
  validate(table);
  json j = table_fields(table);
  j["name"] = table.name;
  j["variant"] = std::string(to_string(cmap.variant()));
  j["e_min"] = cmap.e_min();
  j["e_max"] = cmap.e_max();
  j["within_band_mode"] = std::string(to_string(cmap.within_band_mode()));
  json bands = json::array();
  for (const ExponentBand& b : cmap.bands()) {
    bands.push_back({{"exponent", b.exponent},
                     {"hue_anchor", b.hue_anchor},
                     {"direction", std::string(to_string(b.direction))},
                     {"ramp_start", lab_json(b.ramp_start)},
                     {"ramp_end", lab_json(b.ramp_end)}});
  }
  j["bands"] = std::move(bands);
  return j.dump(2) + '\n';
}

ColormapFile parse_colormap_json(std::string_view text) {
  const json j = parse_json(text);
  ColormapFile file{table_from_json(j), std::nullopt};
  if (!j.contains("bands")) return file;

  try {
    std::vector<ExponentBand> bands;
    for (const json& b : j.at("bands")) {
      ExponentBand band;
      band.exponent = b.at("exponent").get<int>();
      band.hue_anchor = b.at("hue_anchor").get<double>();
      const std::string dir = b.at("direction").get<std::string>();
      if (dir != "ascending" && dir != "descending") throw Error(ErrorCode::ParseError, "bad direction '" + dir + "'");
      band.direction = dir == "ascending" ? Direction::Ascending : Direction::Descending;
      band.ramp_start = lab_from_json(b.at("ramp_start"));
      band.ramp_end = lab_from_json(b.at("ramp_end"));
      bands.push_back(band);
    }
    file.omc.emplace(j.at("e_min").get<int>(), j.at("e_max").get<int>(), std::move(bands),
                     parse_variant(j.at("variant").get<std::string>()),
                     parse_within_band_mode(j.at("within_band_mode").get<std::string>()));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return file;
}

void export_table(const ColormapTable& table, const std::filesystem::path& path, std::optional<TableFormat> format) {
  const TableFormat f = format.value_or(format_for_path(path));
  write_text_file(path, f == TableFormat::Native ? to_native_text(table) : to_json_text(table));
}

ColormapTable import_table(const std::filesystem::path& path, std::optional<TableFormat> format) {
  const TableFormat f = format.value_or(format_for_path(path));
  const std::string text = read_text_file(path);
  return f == TableFormat::Native ? parse_native_text(text, path.stem().string()) : parse_json_text(text);
}

void write_colormap_file(const OmcColormap& cmap, const ColormapTable& table, const std::filesystem::path& path) {
  write_text_file(path, to_json_text(cmap, table));
}

ColormapFile read_colormap_file(const std::filesystem::path& path) {
  if (format_for_path(path) == TableFormat::Native) return {import_table(path, TableFormat::Native), std::nullopt};
  return parse_colormap_json(read_text_file(path));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
}

}  // namespace omc
