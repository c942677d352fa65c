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

#include "divfield/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "divfield/errors.hpp"

namespace divfield {

using nlohmann::json;

std::string_view classification_label(Classification c) {
    switch (c) {
        case Classification::Obstruction: return "obstruction";
        case Classification::ObstructionOnlyFullImage: return "red";
        case Classification::NoObstruction: return "none";
    }
    return "?";
}

Classification parse_classification_label(std::string_view label) {
    if (label == "obstruction") return Classification::Obstruction;
    if (label == "red") return Classification::ObstructionOnlyFullImage;
    if (label == "none") return Classification::NoObstruction;
    throw InvalidInput("unknown classification '" + std::string(label) + "'");
}

VerdictRow make_row(const FrobeniusDatum& datum, const Verdict& v) {
    return {datum.p(),        datum.trace(), datum.index(),  v.n,
            v.residue_degree, v.num_primes,  v.irred_supply, v.classification};
}

json to_json(const OutputRecord& record) {
    json verdicts = json::array();
    for (const VerdictRow& r : record.verdicts) {
        verdicts.push_back({{"p", r.p},
                            {"a_p", r.a_p},
                            {"b_p", r.b_p},
                            {"n", r.n},
                            {"residue_degree", r.residue_degree},
                            {"num_primes", r.num_primes},
                            {"irred_supply", r.irred_supply},
                            {"classification", classification_label(r.classification)}});
    }
    return {{"schema_version", record.schema_version},
            {"command", record.command},
            {"inputs", record.inputs},
            {"verdicts", std::move(verdicts)},
            {"results", record.results}};
}

OutputRecord record_from_json(const json& doc) {
    try {
        OutputRecord r;
        r.schema_version = doc.at("schema_version").get<std::string>();
        if (r.schema_version != kSchemaVersion)
            throw InvalidInput("unsupported schema_version '" + r.schema_version + "'");
        r.command = doc.at("command").get<std::string>();
        r.inputs = doc.at("inputs").get<std::map<std::string, std::string>>();
        for (const json& v : doc.at("verdicts")) {
            r.verdicts.push_back({v.at("p").get<std::uint64_t>(), v.at("a_p").get<std::int64_t>(),
                                  v.at("b_p").get<std::uint64_t>(), v.at("n").get<std::uint64_t>(),
                                  v.at("residue_degree").get<std::uint64_t>(),
                                  v.at("num_primes").get<std::uint64_t>(),
                                  v.at("irred_supply").get<std::uint64_t>(),
                                  parse_classification_label(v.at("classification").get<std::string>())});
        }
        r.results = doc.value("results", json::object());
        return r;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed output record: ") + e.what());
    }
}

void write_csv(std::ostream& os, std::span<const VerdictRow> rows) {
    os << kCsvHeader << '\n';
    for (const VerdictRow& r : rows) {
        os << r.p << ',' << r.a_p << ',' << r.b_p << ',' << r.n << ',' << r.residue_degree << ','
           << r.num_primes << ',' << r.irred_supply << ',' << classification_label(r.classification) << '\n';
    }
}

std::vector<VerdictRow> table_rows(std::span<const ScanReport> reports) {
    std::vector<VerdictRow> rows;
    for (const ScanReport& report : reports)
        for (const Verdict& v : report.obstructed) rows.push_back(make_row(report.datum, v));
    return rows;
}

std::string format_n_list(const ScanReport& report) {
    std::string out;
    for (const Verdict& v : report.obstructed) {
        if (!out.empty()) out += ", ";
        if (v.classification == Classification::ObstructionOnlyFullImage) out += '*';
        out += std::to_string(v.n);
    }
    return out;
}

std::string render_table(std::uint64_t p, std::uint64_t n_max, std::span<const ScanReport> reports) {
    std::ostringstream os;
    os << "# p = " << p << ", 2 <= n <= " << n_max
       << "; *n: obstruction only for a surjective mod-n image\n";
    os << std::left << std::setw(5) << "a_p" << std::setw(5) << "b_p" << std::setw(22) << "sigma"
       << "non-monogenic n\n";
    for (const ScanReport& r : reports) {
        std::ostringstream matrix;
        matrix << r.sigma;
        std::ostringstream line;
        line << std::left << std::setw(5) << r.datum.trace() << std::setw(5) << r.datum.index()
             << std::setw(22) << matrix.str() << format_n_list(r);
        std::string text = line.str();
        text.erase(text.find_last_not_of(' ') + 1);
        os << text << '\n';
    }
    return os.str();
}

}  // namespace divfield
