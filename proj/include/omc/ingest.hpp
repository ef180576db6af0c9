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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omc/error.hpp"

namespace omc {

/// Why a record was excluded from plotting.
enum class MaskReason : std::uint8_t {
  Valid,
  Missing,      ///< value matched a missing-data token
  NonPositive,  ///< value <= 0, not representable on a log scale
  NonFinite,    ///< inf
  OutOfBounds,  ///< time or height outside the configured axes
};

std::string_view to_string(MaskReason r);

struct AxisRange {
  double min = 0.0;
  double max = 1.0;
};

struct SeriesMetadata {
  std::string source;
  std::string variable = "value";
  std::string units;
};

/// Parallel columns of one day of measurements. Masked rows are kept so that
/// row numbers stay meaningful.
struct TimeHeightSeries {
  std::vector<double> time;    ///< hours
  std::vector<double> height;  ///< km
  std::vector<double> value;   ///< NaN where missing
  std::vector<MaskReason> mask;
  SeriesMetadata metadata;
  AxisRange time_range{0.0, 24.0};
  AxisRange height_range{0.0, 12.0};

  std::size_t size() const { return value.size(); }
  bool valid(std::size_t i) const { return mask[i] == MaskReason::Valid; }
  std::size_t valid_count() const;
  std::size_t masked_count() const { return size() - valid_count(); }
  std::size_t count(MaskReason reason) const;

  /// Smallest and largest unmasked value. Throws NoValidRows if none.
  std::pair<double, double> value_range() const;
};

struct CsvOptions {
  char delimiter = ',';
  std::string time_column = "time";
  std::string height_column = "height";
  std::string value_column = "value";
  /// Columns used when the header names none of the three columns above.
  std::array<std::size_t, 3> fallback_indices{0, 1, 2};
  std::vector<std::string> missing_tokens{"", "NaN", "nan", "-999"};
  AxisRange time_range{0.0, 24.0};
  AxisRange height_range{0.0, 12.0};
};

TimeHeightSeries parse_csv_text(std::string_view text, const CsvOptions& options = {}, std::string source = {});
TimeHeightSeries parse_csv(const std::filesystem::path& path, const CsvOptions& options = {});

/// Exponent span of the unmasked values. Throws NoValidRows if none.
std::pair<int, int> observed_exponent_span(const TimeHeightSeries& series);

/// Writes the series back as "time,height,value" CSV (masked values as NaN).
std::string to_csv_text(const TimeHeightSeries& series);

}  // namespace omc
