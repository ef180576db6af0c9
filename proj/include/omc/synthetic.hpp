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

#include <cstddef>
#include <cstdint>

#include "omc/ingest.hpp"

namespace omc {

/// A deterministic stand-in for one day of cloud ice water content: `n`
/// records scattered over 0-24 h and 0-12 km with values spanning 1e-8 to
/// 1e-1 in smooth layers. Identical (n, seed) give identical series on every
/// platform with an IEEE libm.
TimeHeightSeries synthetic_day(std::size_t n, std::uint64_t seed = 20220623);

}  // namespace omc
