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

#ifndef DIVFIELD_REPORT_HPP
#define DIVFIELD_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divfield/obstruction.hpp"
#include "json.hpp"

namespace divfield {

inline constexpr std::string_view kSchemaVersion = "1";

/// "obstruction", "red" or "none".
std::string_view classification_label(Classification c);
Classification parse_classification_label(std::string_view label);

/// Flat projection of a Verdict; also the fixed CSV column set.
struct VerdictRow {
    std::uint64_t p = 0;
    std::int64_t a_p = 0;
    std::uint64_t b_p = 0;
    std::uint64_t n = 0;
    std::uint64_t residue_degree = 0;
    std::uint64_t num_primes = 0;
    std::uint64_t irred_supply = 0;
    Classification classification = Classification::NoObstruction;

    friend bool operator==(const VerdictRow&, const VerdictRow&) = default;
};

VerdictRow make_row(const FrobeniusDatum& datum, const Verdict& verdict);

/* Structured result of one CLI invocation.
 *
 * inputs is an ordered map so serialization is stable; results carries
 * command-specific extras (sigma entries, supersingular and threshold checks, skipped primes).
 */
struct OutputRecord {
    std::string schema_version{kSchemaVersion};
    std::string command;
    std::map<std::string, std::string> inputs;
    std::vector<VerdictRow> verdicts;
    nlohmann::json results = nlohmann::json::object();

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::json to_json(const OutputRecord& record);
/// Throws InvalidInput on a malformed document or an unknown schema version.
OutputRecord record_from_json(const nlohmann::json& doc);

inline constexpr std::string_view kCsvHeader =
    "p,a_p,b_p,n,residue_degree,num_primes,irred_supply,classification";

/// Header line plus one line per row, '\n' terminated.
void write_csv(std::ostream& os, std::span<const VerdictRow> rows);

/// Rows of one table, flattened in table order.
std::vector<VerdictRow> table_rows(std::span<const ScanReport> reports);

/* Plain-text rendering of a full table: one line per (a_p, b_p) with the
 * Frobenius matrix and the obstructed n; n obstructed only under a
 * surjective image is written *n.
 */
std::string render_table(std::uint64_t p, std::uint64_t n_max, std::span<const ScanReport> reports);

/// "3, *5, 9" style list for one row.
std::string format_n_list(const ScanReport& report);

}  // namespace divfield

#endif  // DIVFIELD_REPORT_HPP
