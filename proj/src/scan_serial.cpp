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

#include <numeric>

#include "divfield/obstruction.hpp"
#include "engine.hpp"

namespace divfield::reference {

ScanReport scan(const FrobeniusDatum& datum, std::uint64_t n_max) {
    detail::require_scan_range(n_max);
    ScanReport report{datum, sigma(datum), n_max, {}};
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        if (std::gcd(n, datum.p()) != 1) continue;
        Verdict v = detail::evaluate(datum, report.sigma, n, ImageAssumption::FullGL2);
        if (v.obstructed()) report.obstructed.push_back(v);
    }
    return report;
}

std::vector<ScanReport> full_table(std::uint64_t p, std::uint64_t n_max) {
    std::vector<ScanReport> rows;
    for (const FrobeniusDatum& d : admissible_data(p)) rows.push_back(reference::scan(d, n_max));
    return rows;
}

}  // namespace divfield::reference
