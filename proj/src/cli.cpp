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

#include "divfield/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "divfield/arith.hpp"
#include "divfield/curves.hpp"
#include "divfield/errors.hpp"
#include "divfield/frobenius.hpp"
#include "divfield/obstruction.hpp"
#include "divfield/report.hpp"

namespace divfield::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw InvalidInput("unknown format '" + name + "' (expected text, csv or json)");
}

void require_no_csv(Format format, const std::string& command) {
    if (format == Format::Csv)
        throw InvalidInput("csv output is only available for test, table and curve, not " + command);
}

std::string supply_text(std::uint64_t supply) {
    return supply == kCountSaturated ? ">=2^64" : std::to_string(supply);
}

json matrix_json(const IntMatrix2& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

void emit(std::ostream& out, Format format, const OutputRecord& record, const std::string& text) {
    switch (format) {
        case Format::Text: out << text; break;
        case Format::Csv: write_csv(out, record.verdicts); break;
        case Format::Json: out << to_json(record).dump(2) << '\n'; break;
    }
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream os;
    os << "residue_degree=" << v.residue_degree << " num_primes=" << v.num_primes
       << (v.split_exact ? "" : " (inexact)") << " irred_supply=" << supply_text(v.irred_supply) << " "
       << to_string(v.classification);
    return os.str();
}

struct Options {
    std::string format = "text";
    int threads = 0;

    std::uint64_t p = 0;
    std::int64_t a = 0;
    std::uint64_t b = 1;
    std::uint64_t n = 0;
    std::uint64_t n_max = 999;
    std::string image = "full";

    std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    std::string family;
    std::optional<std::int64_t> t, s, u, v;
    std::optional<std::uint64_t> curve_n, curve_n_max;
    std::uint64_t p_max = 0;

    std::uint64_t index = 1;
};

int cmd_sigma(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    require_no_csv(format, "sigma");
    const FrobeniusDatum d(o.p, o.a, o.b);
    const IntMatrix2 m = sigma(d);

    OutputRecord rec;
    rec.command = "sigma";
    rec.inputs = {{"p", std::to_string(o.p)}, {"a", std::to_string(o.a)}, {"b", std::to_string(o.b)}};
    rec.results = {{"sigma", matrix_json(m)},
                   {"delta_pi", d.delta_pi()},
                   {"delta_end", d.delta_end()},
                   {"delta_parity", d.delta_parity()},
                   {"supersingular", d.kind() == Reduction::Supersingular}};

    std::ostringstream text;
    text << "p = " << d.p() << ", a_p = " << d.trace() << ", b_p = " << d.index() << " ("
         << (d.kind() == Reduction::Supersingular ? "supersingular" : "ordinary") << ")\n"
         << "delta_pi = " << d.delta_pi() << ", delta_end = " << d.delta_end()
         << ", delta_parity = " << d.delta_parity() << "\n"
         << "sigma = " << m << "\n";
    emit(out, format, rec, text.str());
    return kExitOk;
}

int cmd_test(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    const FrobeniusDatum d(o.p, o.a, o.b);
    const ImageAssumption image = parse_image(o.image);
    const Verdict v = test(d, o.n, image);

    OutputRecord rec;
    rec.command = "test";
    rec.inputs = {{"p", std::to_string(o.p)}, {"a", std::to_string(o.a)}, {"b", std::to_string(o.b)},
                  {"n", std::to_string(o.n)}, {"image", std::string(to_string(image))}};
    rec.verdicts.push_back(make_row(d, v));
    rec.results = {{"degree", v.degree}, {"split_exact", v.split_exact}, {"sigma", matrix_json(sigma(d))}};

    std::ostringstream text;
    text << "p=" << d.p() << " a_p=" << d.trace() << " b_p=" << d.index() << " n=" << v.n
         << " image=" << to_string(image) << ": " << verdict_text(v) << "\n";
    emit(out, format, rec, text.str());
    return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    const std::vector<ScanReport> reports = full_table(o.p, o.n_max);

    OutputRecord rec;
    rec.command = "table";
    rec.inputs = {{"p", std::to_string(o.p)}, {"n_max", std::to_string(o.n_max)}};
    rec.verdicts = table_rows(reports);
    json rows = json::array();
    for (const ScanReport& r : reports)
        rows.push_back({{"a_p", r.datum.trace()}, {"b_p", r.datum.index()}, {"sigma", matrix_json(r.sigma)}});
    rec.results = {{"rows", std::move(rows)}};

    emit(out, format, rec, render_table(o.p, o.n_max, reports));
    return kExitOk;
}

int cmd_curve(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    const ImageAssumption image = parse_image(o.image);

    std::optional<WeierstrassCurve> curve;
    std::map<std::string, std::string> inputs;
    if (!o.family.empty()) {
        const Family fam = parse_family(o.family);
        std::vector<std::int64_t> params;
        auto need = [](const std::optional<std::int64_t>& x, const char* flag) {
            if (!x) throw InvalidInput(std::string("missing ") + flag + " for this family");
            return *x;
        };
        switch (fam) {
            case Family::DanielsT: params = {need(o.t, "--t")}; break;
            case Family::SemistableS: params = {need(o.s, "--s")}; break;
            case Family::UV: params = {need(o.u, "--u"), need(o.v, "--v")}; break;
        }
        curve.emplace(make_family(fam, params));
        inputs["family"] = std::string(family_name(fam));
        const char* names[] = {"param0", "param1"};
        for (std::size_t i = 0; i < params.size(); ++i) inputs[names[i]] = std::to_string(params[i]);
    } else {
        curve.emplace(WeierstrassCoefficients{o.a1, o.a2, o.a3, o.a4, o.a6});
    }
    const auto& c = curve->coefficients();
    inputs["a1"] = std::to_string(c.a1);
    inputs["a2"] = std::to_string(c.a2);
    inputs["a3"] = std::to_string(c.a3);
    inputs["a4"] = std::to_string(c.a4);
    inputs["a6"] = std::to_string(c.a6);
    inputs["p_max"] = std::to_string(o.p_max);
    inputs["image"] = std::string(to_string(image));

    if (o.curve_n.has_value() == o.curve_n_max.has_value())
        throw InvalidInput("give exactly one of --n or --n-max");
    std::uint64_t n_lo, n_hi;
    if (o.curve_n) {
        n_lo = n_hi = *o.curve_n;
        inputs["n"] = std::to_string(*o.curve_n);
    } else {
        n_lo = 2;
        n_hi = *o.curve_n_max;
        inputs["n_max"] = std::to_string(n_hi);
    }
    if (n_lo < 2) throw InvalidInput("n must be at least 2");
    const bool single = n_lo == n_hi && o.curve_n;

    OutputRecord rec;
    rec.command = "curve";
    rec.inputs = inputs;
    json primes = json::array();

    std::ostringstream text;
    text << "curve " << *curve << "  c4 = " << curve->c4() << "  disc = " << curve->disc() << "\n"
         << "semistable certificate (gcd(c4, disc) = 1): "
         << (is_semistable_certificate(*curve) ? "yes" : "no") << "\n"
         << "image assumption: " << to_string(image)
         << " (verdicts are conditional on this hypothesis about the mod-n image)\n";

    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        const std::vector<PrimeReport> reports = essential_divisor_scan(*curve, n, o.p_max, image);
        bool header = false;
        for (const PrimeReport& r : reports) {
            const bool interesting =
                r.status == PrimeStatus::Confirmed || r.status == PrimeStatus::Conditional;
            if (!single && !interesting) continue;
            if (!header) {
                text << "n = " << n << "\n";
                header = true;
            }
            json pj = {{"n", n}, {"p", r.p}, {"status", to_string(r.status)}};
            if (r.trace) pj["a_p"] = *r.trace;
            primes.push_back(std::move(pj));

            text << "  p = " << r.p << ": ";
            if (!r.trace) {
                text << to_string(r.status) << "\n";
                continue;
            }
            text << "a_p = " << *r.trace << " -> " << to_string(r.status) << "\n";
            for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
                text << "    b_p = " << r.data[i].index() << ": " << verdict_text(r.verdicts[i]) << "\n";
                rec.verdicts.push_back(make_row(r.data[i], r.verdicts[i]));
            }
        }
    }
    rec.results = {{"c4", curve->c4()},
                   {"disc", curve->disc()},
                   {"semistable_certificate", is_semistable_certificate(*curve)},
                   {"primes", std::move(primes)}};
    emit(out, format, rec, text.str());
    return kExitOk;
}

int cmd_supersingular(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    require_no_csv(format, "supersingular");
    const SupersingularCheck s = supersingular_check(o.p);

    OutputRecord rec;
    rec.command = "supersingular";
    rec.inputs = {{"p", std::to_string(o.p)}};
    rec.results = {{"order_b1", s.order_b1},
                   {"order_b2", s.order_b2 ? json(*s.order_b2) : json(nullptr)},
                   {"group_order", s.group_order},
                   {"num_primes", s.num_primes},
                   {"irred_supply", s.irred_supply},
                   {"obstructed", s.obstructed}};

    std::ostringstream text;
    text << "p = " << s.p << ", n = p + 1 = " << s.p + 1 << "\n"
         << "ord(sigma(b=1)) = " << s.order_b1 << ", ord(sigma(b=2)) = "
         << (s.order_b2 ? std::to_string(*s.order_b2) : std::string("absent (p = 1 mod 4)")) << "\n"
         << "|GL_2(Z/" << s.p + 1 << "Z)| = " << s.group_order << ", primes above p = " << s.num_primes
         << ", irreducible quadratics = " << s.irred_supply << "\n"
         << (s.obstructed ? "obstructed: p is an essential discriminant divisor for a surjective image"
                          : "not obstructed")
         << "\n";
    emit(out, format, rec, text.str());
    return kExitOk;
}

int cmd_corollary(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    require_no_csv(format, "corollary");
    const CorollaryThreshold c = corollary_threshold(o.index);

    OutputRecord rec;
    rec.command = "corollary";
    rec.inputs = {{"index", std::to_string(o.index)}};
    rec.results = {{"prime", c.prime},
                   {"group_order", c.group_order},
                   {"irred_supply", c.irred_supply},
                   {"closed_form_holds", c.closed_form_holds},
                   {"closed_form_prime", c.closed_form_prime},
                   {"group_bound_holds", c.group_bound_holds}};

    std::ostringstream text;
    text << "index I = " << c.index << "\n"
         << "least prime p > 3 with |GL_2(Z/(p+1)Z)|/(4I) > irred(2,p): " << c.prime << "\n"
         << "  |GL_2(Z/" << c.prime + 1 << "Z)| = " << c.group_order << ", irred(2," << c.prime
         << ") = " << c.irred_supply << "\n"
         << "  closed form 3(p+1)^4/(16I) > p^2 - p at this p: " << (c.closed_form_holds ? "yes" : "no")
         << " (first holds at p = " << c.closed_form_prime << ")\n"
         << "  |GL_2| >= (3/8)(p+1)^4 at this p: " << (c.group_bound_holds ? "yes" : "no") << "\n";
    emit(out, format, rec, text.str());
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Essential discriminant divisors of elliptic curve division fields", "divfield"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "OpenMP thread count (0 = runtime default)")->check(CLI::NonNegativeNumber);

    auto add_format = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "text, csv or json")->capture_default_str();
    };
    auto add_datum = [&o](CLI::App* sub) {
        sub->add_option("--p", o.p, "prime")->required();
        sub->add_option("--a", o.a, "trace of Frobenius a_p")->required();
        sub->add_option("--b", o.b, "index b_p of Z[pi] in End(E)")->capture_default_str();
    };

    CLI::App* sigma_cmd = app.add_subcommand("sigma", "Frobenius matrix and discriminants of a datum");
    add_datum(sigma_cmd);
    add_format(sigma_cmd);

    CLI::App* test_cmd = app.add_subcommand("test", "obstruction verdict for one (datum, n)");
    add_datum(test_cmd);
    test_cmd->add_option("--n", o.n, "torsion level")->required();
    test_cmd->add_option("--image", o.image, "full or index2")->capture_default_str();
    add_format(test_cmd);

    CLI::App* table_cmd = app.add_subcommand("table", "all obstructed n for every admissible datum at p");
    table_cmd->add_option("--p", o.p, "prime")->required();
    table_cmd->add_option("--n-max", o.n_max, "largest n scanned")->capture_default_str();
    add_format(table_cmd);

    CLI::App* curve_cmd = app.add_subcommand("curve", "essential discriminant divisors of a curve's division field");
    curve_cmd->add_option("--a1", o.a1);
    curve_cmd->add_option("--a2", o.a2);
    curve_cmd->add_option("--a3", o.a3);
    curve_cmd->add_option("--a4", o.a4);
    curve_cmd->add_option("--a6", o.a6);
    curve_cmd->add_option("--family", o.family, "daniels, semistable or uv");
    curve_cmd->add_option("--t", o.t, "daniels parameter");
    curve_cmd->add_option("--s", o.s, "semistable parameter");
    curve_cmd->add_option("--u", o.u, "uv parameter u");
    curve_cmd->add_option("--v", o.v, "uv parameter v");
    curve_cmd->add_option("--n", o.curve_n, "torsion level");
    curve_cmd->add_option("--n-max", o.curve_n_max, "scan all 2 <= n <= n-max");
    curve_cmd->add_option("--p-max", o.p_max, "largest prime examined")->required();
    curve_cmd->add_option("--image", o.image, "full or index2")->capture_default_str();
    add_format(curve_cmd);

    CLI::App* ss_cmd = app.add_subcommand("supersingular", "order-2 Frobenius check at level p + 1");
    ss_cmd->add_option("--p", o.p, "prime > 3")->required();
    add_format(ss_cmd);

    CLI::App* cor_cmd = app.add_subcommand("corollary", "least prime meeting the infinitude inequality");
    cor_cmd->add_option("--index", o.index, "index I of the adelic image")->capture_default_str();
    add_format(cor_cmd);

    std::vector<std::string> storage{"divfield"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalidInput;
    }

#ifdef _OPENMP
    if (o.threads > 0) omp_set_num_threads(o.threads);
#endif

    // All output is buffered so a failure never leaves a partial table behind.
    std::ostringstream buffer;
    try {
        int code = kExitOk;
        if (*sigma_cmd) code = cmd_sigma(o, buffer);
        else if (*test_cmd) code = cmd_test(o, buffer);
        else if (*table_cmd) code = cmd_table(o, buffer);
        else if (*curve_cmd) code = cmd_curve(o, buffer);
        else if (*ss_cmd) code = cmd_supersingular(o, buffer);
        else if (*cor_cmd) code = cmd_corollary(o, buffer);
        out << buffer.str();
        return code;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const ArithmeticError& e) {
        err << "internal arithmetic error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

}  // namespace divfield::cli
