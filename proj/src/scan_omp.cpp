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

#include <exception>
#include <numeric>
#include <optional>

#include "divfield/obstruction.hpp"
#include "engine.hpp"

namespace divfield {

ScanReport scan(const FrobeniusDatum& datum, std::uint64_t n_max) {
    detail::require_scan_range(n_max);
    const IntMatrix2 s = sigma(datum);
    const std::uint64_t p = datum.p();

    // One slot per n so the gather below is ordered whatever the schedule.
    std::vector<std::optional<Verdict>> cells(n_max + 1);
    std::exception_ptr failure;

    const auto last = static_cast<std::int64_t>(n_max);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 2; i <= last; ++i) {
        const auto n = static_cast<std::uint64_t>(i);
        if (std::gcd(n, p) != 1) continue;
        try {
            Verdict v = detail::evaluate(datum, s, n, ImageAssumption::FullGL2);
            if (v.obstructed()) cells[n] = v;
        } catch (...) {
#pragma omp critical(divfield_scan_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    ScanReport report{datum, s, n_max, {}};
    for (auto& cell : cells)
        if (cell) report.obstructed.push_back(*cell);
    return report;
}

std::vector<ScanReport> full_table(std::uint64_t p, std::uint64_t n_max) {
    std::vector<ScanReport> rows;
    for (const FrobeniusDatum& d : admissible_data(p)) rows.push_back(scan(d, n_max));
    return rows;
}

}  // namespace divfield
