/*
   Copyright 2026 The divfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DIVFIELD_SRC_ENGINE_HPP
#define DIVFIELD_SRC_ENGINE_HPP

// Internal helpers shared by the serial and OpenMP scan kernels.

#include <cstdint>

#include "divfield/obstruction.hpp"

namespace divfield::detail {

/// test() with sigma precomputed.
Verdict evaluate(const FrobeniusDatum& datum, const IntMatrix2& sigma, std::uint64_t n,
                 ImageAssumption image);

void require_scan_range(std::uint64_t n_max);

}  // namespace divfield::detail

#endif  // DIVFIELD_SRC_ENGINE_HPP
