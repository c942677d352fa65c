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

#include <random>

#include "divfield/arith.hpp"
#include "divfield/curves.hpp"
#include "divfield/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace divfield;

TEST_CASE("invariants") {
    for (std::int64_t s = -50; s <= 50; ++s) {
        const CurveInvariants inv = invariants({0, 1, 1, 0, s});
        REQUIRE(inv.c4 == 16);
        REQUIRE(inv.disc == -432 * s * s - 280 * s - 43);
    }
    for (std::int64_t u = -9; u <= 9; ++u) {
        for (std::int64_t v = -9; v <= 9; ++v) {
            const CurveInvariants inv = invariants({0, v, u, 0, 0});
            REQUIRE(inv.c4 == 16 * v * v);
            REQUIRE(inv.disc == -u * u * (16 * v * v * v + 27 * u * u));
        }
    }
    const CurveInvariants inv = invariants({0, 0, 0, 0, 1});
    CHECK(inv.c4 == 0);
    CHECK(inv.disc == -432);
}

TEST_CASE("b8 is integral for arbitrary coefficients") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 2000; ++t) {
        WeierstrassCoefficients c{static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 41) - 20,
                                  static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 41) - 20,
                                  static_cast<std::int64_t>(rng() % 41) - 20};
        const CurveInvariants inv = invariants(c);
        REQUIRE(4 * inv.b8 == inv.b2 * inv.b6 - inv.b4 * inv.b4);
        // 1728 disc = c4^3 - c6^2 with c6 = -b2^3 + 36 b2 b4 - 216 b6
        const __int128 c6 = -static_cast<__int128>(inv.b2) * inv.b2 * inv.b2 + 36 * inv.b2 * inv.b4 - 216 * inv.b6;
        const __int128 c4 = inv.c4;
        REQUIRE(1728 * static_cast<__int128>(inv.disc) == c4 * c4 * c4 - c6 * c6);
    }
}

TEST_CASE("singular models are rejected") {
    CHECK_THROWS_AS(WeierstrassCurve({0, 0, 0, 0, 0}), InvalidInput);
    CHECK_THROWS_AS(uv_family(0, 1), InvalidInput);
    CHECK_THROWS_AS(WeierstrassCurve({0, 0, 0, -3, 2}), InvalidInput);  // (x-1)^2 (x+2)
}

TEST_CASE("count_points") {
    CHECK(count_points(daniels_t(1), 2) == 4);
    CHECK(count_points(semistable_s(1), 2) == 1);
    CHECK(trace_of_frobenius(daniels_t(1), 2) == -1);
    CHECK(trace_of_frobenius(semistable_s(1), 2) == 2);
    CHECK_THROWS_AS(count_points(WeierstrassCurve({0, 0, 0, 0, 1}), 2), InvalidInput);
    CHECK_THROWS_AS(count_points(WeierstrassCurve({0, 0, 0, 0, 1}), 3), InvalidInput);
    CHECK_THROWS_AS(count_points(daniels_t(1), 9), InvalidInput);
}

TEST_CASE("point counts agree with a character sum and satisfy the Hasse bound") {
    std::mt19937_64 rng(42);
    const auto primes = primes_in_range(2, 50);
    int tested = 0;
    while (tested < 600) {
        WeierstrassCoefficients c;
        for (std::int64_t* x : {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6}) *x = static_cast<std::int64_t>(rng() % 41) - 20;
        if (invariants(c).disc == 0) continue;
        const WeierstrassCurve curve(c);
        const std::uint64_t p = primes[rng() % primes.size()];
        if (!curve.has_good_reduction(p)) continue;
        const std::int64_t a = trace_of_frobenius(curve, p);
        REQUIRE(static_cast<std::uint64_t>(a * a) <= 4 * p);
        if (p != 2) {
            const auto sp = static_cast<std::int64_t>(p);
            std::int64_t inv4 = 1;
            while (4 * inv4 % sp != 1) ++inv4;
            // (y + (a1 x + a3)/2)^2 = x^3 + (a2 + a1^2/4) x^2 + (a4 + a1 a3/2) x + (a6 + a3^2/4)
            const std::int64_t c2 = oracle::md(c.a2 + c.a1 * c.a1 % sp * inv4, sp);
            const std::int64_t c1 = oracle::md(c.a4 + 2 * c.a1 * c.a3 % sp * inv4, sp);
            const std::int64_t c0 = oracle::md(c.a6 + c.a3 * c.a3 % sp * inv4, sp);
            REQUIRE(static_cast<std::int64_t>(count_points(curve, p)) == oracle::character_point_count(c2, c1, c0, sp));
        }
        ++tested;
    }
}

TEST_CASE("family traces at 2") {
    for (std::int64_t t = -99; t <= 99; t += 2) REQUIRE(trace_of_frobenius(daniels_t(t), 2) == -1);
    // a6 = s only survives mod 2 through its parity: odd s gives 2, even s gives -2.
    for (std::int64_t s = -99; s <= 99; ++s)
        REQUIRE(trace_of_frobenius(semistable_s(s), 2) == (s % 2 != 0 ? 2 : -2));
    for (std::int64_t u = -9; u <= 9; u += 2)
        for (std::int64_t v = -8; v <= 8; v += 2) REQUIRE(trace_of_frobenius(uv_family(u, v), 2) == 0);
}

TEST_CASE("even t makes the Daniels model singular at 2") {
    for (std::int64_t t = -20; t <= 20; t += 2) {
        if (t == 0) continue;
        CHECK_FALSE(daniels_t(t).has_good_reduction(2));
    }
}

TEST_CASE("semistability certificate") {
    for (std::int64_t s = -50; s <= 50; ++s) CHECK(is_semistable_certificate(semistable_s(s)));
    for (std::int64_t u = -9; u <= 9; u += 2)
        for (std::int64_t v = -8; v <= 8; v += 2)
            if (v != 0 && std::gcd(3 * u, v) == 1) CHECK(is_semistable_certificate(uv_family(u, v)));
    CHECK_FALSE(is_semistable_certificate(WeierstrassCurve({0, 0, 0, 0, 4})));
}

TEST_CASE("families") {
    CHECK(daniels_t(1).coefficients() == WeierstrassCoefficients{1, 0, 0, 0, 1});
    CHECK(semistable_s(0).disc() == -43);
    CHECK(semistable_s(0).coefficients() == WeierstrassCoefficients{0, 1, 1, 0, 0});
    CHECK(uv_family(1, 2).disc() == -155);
    CHECK(uv_family(1, 2).coefficients() == WeierstrassCoefficients{0, 2, 1, 0, 0});
    const std::vector<std::int64_t> uv{1, 2};
    CHECK(make_family(Family::UV, uv).disc() == -155);
    CHECK(parse_family("daniels") == Family::DanielsT);
    CHECK_THROWS_AS(parse_family("legendre"), InvalidInput);
    CHECK_THROWS_AS(make_family(Family::DanielsT, uv), InvalidInput);
}
