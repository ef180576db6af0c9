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

#include "omc/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "omc/error.hpp"
#include "omc/scinum.hpp"
#include "omc/table_io.hpp"

namespace omc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void fail_at(std::size_t row, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::ParseError, "row " + std::to_string(row) + ", column " + std::to_string(column + 1) + ": " + what);
}

std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) {
    // Underflow/overflow: fall back to strtod semantics.
    return std::strtod(std::string(s).c_str(), nullptr);
  }
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool inside(double x, const AxisRange& r) { return x >= r.min && x <= r.max; }

}  // namespace

std::string_view to_string(MaskReason r) {
  switch (r) {
    case MaskReason::Valid: return "valid";
    case MaskReason::Missing: return "missing";
    case MaskReason::NonPositive: return "non-positive";
    case MaskReason::NonFinite: return "non-finite";
    case MaskReason::OutOfBounds: return "out-of-bounds";
  }
  return "unknown";
}

std::size_t TimeHeightSeries::valid_count() const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), MaskReason::Valid));
}

std::size_t TimeHeightSeries::count(MaskReason reason) const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), reason));
}

std::pair<double, double> TimeHeightSeries::value_range() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!valid(i)) continue;
    lo = std::min(lo, value[i]);
    hi = std::max(hi, value[i]);
  }
  if (!(lo <= hi)) throw Error(ErrorCode::NoValidRows, "series has no unmasked values");
  return {lo, hi};
}

TimeHeightSeries parse_csv_text(std::string_view text, const CsvOptions& options, std::string source) {
  auto is_missing = [&](std::string_view s) {
    return std::find(options.missing_tokens.begin(), options.missing_tokens.end(), s) != options.missing_tokens.end();
  };

  TimeHeightSeries series;
  series.metadata.source = std::move(source);
  series.metadata.variable = options.value_column;
  series.time_range = options.time_range;
  series.height_range = options.height_range;

  std::optional<std::array<std::size_t, 3>> columns;
  std::size_t row = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++row;
    if (trim(line).empty()) continue;
    const std::vector<std::string_view> fields = split(line, options.delimiter);

    if (!columns) {
      const std::array<std::string_view, 3> names{options.time_column, options.height_column, options.value_column};
      std::array<std::optional<std::size_t>, 3> found;
      for (std::size_t k = 0; k < 3; ++k) {
        const auto it = std::find(fields.begin(), fields.end(), names[k]);
        if (it != fields.end()) found[k] = static_cast<std::size_t>(std::distance(fields.begin(), it));
      }
      const auto n_found = std::count_if(found.begin(), found.end(), [](const auto& f) { return f.has_value(); });
      if (n_found == 3) {
        columns = std::array<std::size_t, 3>{*found[0], *found[1], *found[2]};
      } else if (n_found == 0) {
        columns = options.fallback_indices;
        const std::size_t widest = *std::max_element(columns->begin(), columns->end());
        if (widest >= fields.size()) {
          throw Error(ErrorCode::SchemaError, "header has " + std::to_string(fields.size()) +
                                                  " columns, none named time/height/value");
        }
      } else {
        std::string missing;
        for (std::size_t k = 0; k < 3; ++k) {
          if (!found[k]) missing += (missing.empty() ? "" : ", ") + std::string(names[k]);
        }
        throw Error(ErrorCode::SchemaError, "header lacks required column(s): " + missing);
      }
      continue;
    }

    const std::size_t t_col = (*columns)[0];
    const std::size_t h_col = (*columns)[1];
    const std::size_t v_col = (*columns)[2];
    const std::size_t need = std::max({t_col, h_col, v_col});
    if (need >= fields.size()) fail_at(row, fields.size(), "row has only " + std::to_string(fields.size()) + " fields");

    MaskReason reason = MaskReason::Valid;
    auto coordinate = [&](std::size_t col) {
      if (is_missing(fields[col])) {
        reason = MaskReason::Missing;
        return std::numeric_limits<double>::quiet_NaN();
      }
      const auto v = parse_number(fields[col]);
      if (!v) fail_at(row, col, "not a number: '" + std::string(fields[col]) + "'");
      if (!std::isfinite(*v) && reason == MaskReason::Valid) reason = MaskReason::NonFinite;
      return *v;
    };
    const double t = coordinate(t_col);
    const double h = coordinate(h_col);

    double v = std::numeric_limits<double>::quiet_NaN();
    if (is_missing(fields[v_col])) {
      if (reason == MaskReason::Valid) reason = MaskReason::Missing;
    } else {
      const auto parsed = parse_number(fields[v_col]);
      if (!parsed) fail_at(row, v_col, "not a number: '" + std::string(fields[v_col]) + "'");
      v = *parsed;
      if (reason == MaskReason::Valid) {
        if (std::isnan(v)) reason = MaskReason::Missing;
        else if (std::isinf(v)) reason = MaskReason::NonFinite;
        else if (v <= 0.0) reason = MaskReason::NonPositive;
      }
    }
    if (reason == MaskReason::Valid && !(inside(t, options.time_range) && inside(h, options.height_range))) {
      reason = MaskReason::OutOfBounds;
    }

    series.time.push_back(t);
    series.height.push_back(h);
    series.value.push_back(v);
    series.mask.push_back(reason);
  }

  if (!columns) throw Error(ErrorCode::NoValidRows, "input is empty");
  if (series.valid_count() == 0) {
    throw Error(ErrorCode::NoValidRows, std::to_string(series.size()) + " data rows, none usable");
  }
  return series;
}

TimeHeightSeries parse_csv(const std::filesystem::path& path, const CsvOptions& options) {
  return parse_csv_text(read_text_file(path), options, path.filename().string());
}

std::pair<int, int> observed_exponent_span(const TimeHeightSeries& series) {
  const auto [lo, hi] = series.value_range();
  return {decompose(lo).exponent, decompose(hi).exponent};
}

std::string to_csv_text(const TimeHeightSeries& series) {
  std::string out = "time,height,value\n";
  out.reserve(series.size() * 48);
  std::array<char, 32> buf{};
  auto put = [&](double x) {
    if (std::isnan(x)) {
      out += "NaN";
      return;
    }
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    out.append(buf.data(), end);
  };
  for (std::size_t i = 0; i < series.size(); ++i) {
    put(series.time[i]);
    out += ',';
    put(series.height[i]);
    out += ',';
    put(series.value[i]);
    out += '\n';
  }
  return out;
}

}  // namespace omc
