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

#ifdef _OPENMP
#include <omp.h>
#endif

#include "divfield/arith.hpp"
#include "divfield/errors.hpp"
#include "divfield/obstruction.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace divfield;

namespace {

std::vector<std::pair<std::uint64_t, Classification>> cells(const ScanReport& r) {
    std::vector<std::pair<std::uint64_t, Classification>> out;
    for (const Verdict& v : r.obstructed) out.emplace_back(v.n, v.classification);
    return out;
}

bool same_rows(const std::vector<ScanReport>& x, const std::vector<ScanReport>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i].datum == y[i].datum) || !(x[i].sigma == y[i].sigma) || cells(x[i]) != cells(y[i]))
            return false;
        for (std::size_t k = 0; k < x[i].obstructed.size(); ++k) {
            const Verdict& a = x[i].obstructed[k];
            const Verdict& b = y[i].obstructed[k];
            if (a.residue_degree != b.residue_degree || a.num_primes != b.num_primes ||
                a.irred_supply != b.irred_supply)
                return false;
        }
    }
    return true;
}

constexpr auto kObs = Classification::Obstruction;
constexpr auto kRed = Classification::ObstructionOnlyFullImage;
constexpr auto kNone = Classification::NoObstruction;

}  // namespace

TEST_CASE("test: p = 2, a = 1, n = 11") {
    const Verdict v = test(FrobeniusDatum(2, 1, 1), 11, ImageAssumption::FullGL2);
    CHECK(v.residue_degree == 10);
    CHECK(v.degree == 13200);
    CHECK(v.num_primes == 1320);
    CHECK(v.irred_supply == 99);
    CHECK(v.classification == kObs);
}

TEST_CASE("test: red entry flips with the image assumption") {
    const FrobeniusDatum d(2, 0, 1);
    CHECK(test(d, 5, ImageAssumption::FullGL2).classification == kRed);
    const Verdict half = test(d, 5, ImageAssumption::Index2Subgroup);
    CHECK(half.classification == kNone);
    CHECK(half.degree == gl2_order(5) / 2);
}

TEST_CASE("test: p = 2, a = 1, n = 7 is not obstructed") {
    // Oracle: sigma = [[1,1],[-2,0]] has a repeated eigenvalue mod 7 and is
    // not scalar, so its order is 21; |GL_2(F_7)| = 2016 gives 96 primes,
    // while irred(21, 2) = (2^21 - 2^7 - 2^3 + 2)/21 = 99858.
    REQUIRE(oracle::naive_order({1, 1, -2, 0}, 7) == 21);
    REQUIRE(oracle::brute_gl2_count(7) == 2016);
    const Verdict v = test(FrobeniusDatum(2, 1, 1), 7, ImageAssumption::FullGL2);
    CHECK(v.residue_degree == 21);
    CHECK(v.num_primes == 96);
    CHECK(v.irred_supply == 99858);
    CHECK(v.classification == kNone);
}

TEST_CASE("test: preconditions") {
    CHECK_THROWS_AS(test(FrobeniusDatum(3, 0, 1), 6, ImageAssumption::FullGL2), InvalidInput);
    CHECK_THROWS_AS(test(FrobeniusDatum(3, 0, 1), 1, ImageAssumption::FullGL2), InvalidInput);
    CHECK_THROWS_AS(test(FrobeniusDatum(2, 1, 1), 22, ImageAssumption::FullGL2), InvalidInput);
}

TEST_CASE("index-2 split is inexact only for non-obstructed n = 2") {
    // ord 2 does not divide |GL_2(F_2)|/2 = 3, so sigma cannot lie in an
    // index-2 subgroup; the verdict stays NoObstruction.
    const Verdict v = test(FrobeniusDatum(3, 0, 1), 2, ImageAssumption::Index2Subgroup);
    CHECK(v.residue_degree == 2);
    CHECK_FALSE(v.split_exact);
    CHECK(v.classification == kNone);
}

TEST_CASE("scan examples") {
    CHECK(cells(scan(FrobeniusDatum(2, 1, 1), 999)) ==
          std::vector<std::pair<std::uint64_t, Classification>>{{11, kObs}});
    CHECK(cells(scan(FrobeniusDatum(2, -1, 1), 999)) ==
          std::vector<std::pair<std::uint64_t, Classification>>{{11, kObs}, {23, kObs}});
    CHECK(scan(FrobeniusDatum(11, 3, 1), 999).obstructed.empty());
    CHECK_THROWS_AS(scan(FrobeniusDatum(2, 1, 1), 1), InvalidInput);
}

TEST_CASE("parallel scan matches the serial reference for every thread count") {
    const std::vector<ScanReport> serial = reference::full_table(7, 999);
#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    for (int threads : {1, 2, 3, 8}) {
        omp_set_num_threads(threads);
        CHECK(same_rows(full_table(7, 999), serial));
    }
    omp_set_num_threads(saved);
#else
    CHECK(same_rows(full_table(7, 999), serial));
#endif
}

TEST_CASE("emitted verdicts: exact divisibility and monotonicity over all table cells") {
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        for (const FrobeniusDatum& d : admissible_data(p)) {
            for (std::uint64_t n = 2; n < 1000; ++n) {
                if (std::gcd(n, p) != 1) continue;
                const Verdict full = test(d, n, ImageAssumption::FullGL2);
                const Verdict half = test(d, n, ImageAssumption::Index2Subgroup);
                REQUIRE(full.residue_degree == half.residue_degree);
                if (half.classification == kObs) REQUIRE(full.classification == kObs);
                if (full.obstructed()) {
                    REQUIRE(gl2_order(n) % full.residue_degree == 0);
                    REQUIRE((gl2_order(n) / 2) % full.residue_degree == 0);
                    REQUIRE(half.split_exact);
                }
            }
        }
    }
}

TEST_CASE("sign symmetry where the tables agree, and the documented asymmetries") {
    auto row = [](std::uint64_t p, std::int64_t a, std::uint64_t b) {
        return cells(scan(FrobeniusDatum(p, a, b), 999));
    };
    CHECK(row(2, 2, 1) == row(2, -2, 1));
    CHECK(row(3, 3, 1) == row(3, -3, 1));
    CHECK(row(5, 4, 1) == row(5, -4, 1));
    CHECK(row(11, 6, 1) == row(11, -6, 1));
    CHECK(row(2, 1, 1) != row(2, -1, 1));
    CHECK(row(11, 1, 1) != row(11, -1, 1));
    CHECK(row(7, 5, 1) != row(7, -5, 1));
}

TEST_CASE("supersingular_check") {
    const SupersingularCheck s5 = supersingular_check(5);
    CHECK(s5.order_b1 == 2);
    CHECK_FALSE(s5.order_b2.has_value());
    CHECK(s5.obstructed);
    CHECK(s5.num_primes == 144);
    CHECK(s5.irred_supply == 10);

    const SupersingularCheck s7 = supersingular_check(7);
    CHECK(s7.order_b1 == 2);
    CHECK(s7.order_b2 == std::optional<std::uint64_t>{2});
    CHECK(s7.obstructed);

    const SupersingularCheck s13 = supersingular_check(13);
    CHECK_FALSE(s13.order_b2.has_value());
    CHECK(s13.group_order == oracle::brute_gl2_count(14));
    CHECK(s13.obstructed);

    CHECK_THROWS_AS(supersingular_check(3), InvalidInput);
    CHECK_THROWS_AS(supersingular_check(9), InvalidInput);
}

TEST_CASE("corollary_threshold") {
    // Expected primes come from a separate search with exact |GL_2| values.
    const CorollaryThreshold c1 = corollary_threshold(1);
    CHECK(c1.prime == 5);
    CHECK(c1.group_order == 288);
    CHECK(c1.irred_supply == 10);
    CHECK(c1.closed_form_holds);
    // The (3/8)(p+1)^4 lower bound fails at p + 1 = 6: 288 < 486.
    CHECK_FALSE(c1.group_bound_holds);

    CHECK(corollary_threshold(2).prime == 5);

    const CorollaryThreshold c10 = corollary_threshold(10);
    CHECK(c10.prime == 7);
    CHECK(c10.closed_form_prime == 5);

    const CorollaryThreshold big = corollary_threshold(1'000'000);
    CHECK(big.prime == 2341);
    CHECK(big.group_order == 11272168720800ull);
    CHECK(big.closed_form_prime == 2309);

    CHECK_THROWS_AS(corollary_threshold(0), InvalidInput);
}

TEST_CASE("essential_divisor_scan") {
    const auto daniels = essential_divisor_scan(daniels_t(1), 11, 2);
    REQUIRE(daniels.size() == 1);
    CHECK(daniels[0].trace == std::optional<std::int64_t>{-1});
    CHECK(daniels[0].status == PrimeStatus::Confirmed);
    REQUIRE(daniels[0].verdicts.size() == 1);
    CHECK(daniels[0].verdicts[0].classification == kObs);

    const auto semistable = essential_divisor_scan(semistable_s(1), 13, 2);
    CHECK(semistable[0].trace == std::optional<std::int64_t>{2});
    CHECK(semistable[0].status == PrimeStatus::Confirmed);
    CHECK(essential_divisor_scan(semistable_s(5), 41, 2)[0].status == PrimeStatus::Confirmed);

    const auto six = essential_divisor_scan(daniels_t(1), 6, 3);
    REQUIRE(six.size() == 2);
    CHECK(six[0].status == PrimeStatus::SkippedDividesN);
    CHECK(six[1].status == PrimeStatus::SkippedDividesN);

    // y^2 = x^3 + 1 has disc -432 = -2^4 3^3.
    const auto bad = essential_divisor_scan(WeierstrassCurve({0, 0, 0, 0, 1}), 11, 7);
    REQUIRE(bad.size() == 4);
    CHECK(bad[0].status == PrimeStatus::SkippedBadReduction);
    CHECK(bad[1].status == PrimeStatus::SkippedBadReduction);
    CHECK(bad[2].trace.has_value());

    for (std::uint64_t n : {11, 43, 331, 683})
        CHECK(essential_divisor_scan(uv_family(1, 2), n, 2)[0].status == PrimeStatus::Confirmed);
}

TEST_CASE("essential_divisor_scan reports CONDITIONAL when b changes the verdict") {
    // At p = 7 with a_7 = -1 the index b = 3 obstructs n = 9 but b = 1 does
    // not; find a curve with that reduction and check the status.
    bool found = false;
    for (std::int64_t a6 = -30; a6 <= 30 && !found; ++a6) {
        for (std::int64_t a4 = -10; a4 <= 10 && !found; ++a4) {
            const WeierstrassCoefficients c{0, 0, 0, a4, a6};
            if (invariants(c).disc == 0) continue;
            const WeierstrassCurve e(c);
            if (!e.has_good_reduction(7) || trace_of_frobenius(e, 7) != -1) continue;
            const auto reports = essential_divisor_scan(e, 9, 7);
            CHECK(reports.back().p == 7);
            CHECK(reports.back().status == PrimeStatus::Conditional);
            found = true;
        }
    }
    CHECK(found);
}
