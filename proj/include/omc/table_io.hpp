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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "omc/colormap.hpp"

namespace omc {

/// On-disk colormap formats.
///
/// Native: plain text, one "R,G,B" 8-bit triple per line. Lines starting with
/// '#' are comments; "# key: value" comments carry metadata (name,
/// scale_hint, variant, e_min, e_max, within_band_mode).
///
/// Json: {name, variant, e_min, e_max, within_band_mode, scale_hint,
/// stops: [[r,g,b], ...]} with float channels in [0, 1], optionally followed
/// by "bands" describing the OMC ramps so the map can be evaluated exactly.
enum class TableFormat { Native, Json };

/// Chosen from the extension: .txt/.csv/.rgb are native, .json/.cmap are JSON.
TableFormat format_for_path(const std::filesystem::path& path);

std::string to_native_text(const ColormapTable& table);
ColormapTable parse_native_text(std::string_view text, std::string default_name = "imported");

std::string to_json_text(const ColormapTable& table);
ColormapTable parse_json_text(std::string_view text);

void export_table(const ColormapTable& table, const std::filesystem::path& path,
                  std::optional<TableFormat> format = std::nullopt);
ColormapTable import_table(const std::filesystem::path& path, std::optional<TableFormat> format = std::nullopt);

/// A colormap file: always a table, plus the exact OMC description when the
/// file carries one.
struct ColormapFile {
  ColormapTable table;
  std::optional<OmcColormap> omc;
};

std::string to_json_text(const OmcColormap& cmap, const ColormapTable& table);
ColormapFile parse_colormap_json(std::string_view text);

void write_colormap_file(const OmcColormap& cmap, const ColormapTable& table, const std::filesystem::path& path);
ColormapFile read_colormap_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace omc
