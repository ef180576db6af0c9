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

#include <stdexcept>
#include <string>
#include <string_view>

namespace omc {

/// Error categories raised by the library. The numeric values double as the
/// process exit codes of the `omcmap` tool, so they must stay stable.
enum class ErrorCode : int {
  NonPositiveValue = 10,
  NotFinite = 11,
  InvalidDomain = 12,
  InvalidSpan = 13,
  TooManyBands = 14,
  InvalidRange = 15,
  ParseError = 16,
  UnsupportedFormat = 17,
  SchemaError = 18,
  NoValidRows = 19,
  EmptyPlot = 20,
  DomainMismatch = 21,
  IoError = 22,
  InvalidArgument = 23,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::InvalidSpan: return "InvalidSpan";
    case ErrorCode::TooManyBands: return "TooManyBands";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::NoValidRows: return "NoValidRows";
    case ErrorCode::EmptyPlot: return "EmptyPlot";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A value paired with a flag telling whether it had to be clamped into its
/// valid range (out-of-gamut colors, out-of-domain data values).
template <typename T>
struct Clamped {
  T value;
  bool clamped = false;
};

}  // namespace omc
