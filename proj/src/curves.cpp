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

#include "divfield/curves.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "divfield/arith.hpp"
#include "divfield/errors.hpp"

namespace divfield {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw ArithmeticError(std::string("curve invariant out of range: ") + what);
    return static_cast<std::int64_t>(v);
}

}  // namespace

CurveInvariants invariants(const WeierstrassCoefficients& c) {
    const i128 a1 = c.a1, a2 = c.a2, a3 = c.a3, a4 = c.a4, a6 = c.a6;
    const i128 b2 = a1 * a1 + 4 * a2;
    const i128 b4 = 2 * a4 + a1 * a3;
    const i128 b6 = a3 * a3 + 4 * a6;
    const i128 b8_times4 = b2 * b6 - b4 * b4;
    if (b8_times4 % 4 != 0) throw ArithmeticError("b8 is not integral");
    const i128 b8 = b8_times4 / 4;
    const i128 c4 = b2 * b2 - 24 * b4;
    const i128 disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    return {narrow(b2, "b2"), narrow(b4, "b4"), narrow(b6, "b6"), narrow(b8, "b8"),
            narrow(c4, "c4"), narrow(disc, "disc")};
}

WeierstrassCurve::WeierstrassCurve(const WeierstrassCoefficients& coeffs)
    : coeffs_(coeffs), inv_(divfield::invariants(coeffs)) {
    if (inv_.disc == 0) throw InvalidInput("singular curve: discriminant is zero");
}

bool WeierstrassCurve::has_good_reduction(std::uint64_t p) const {
    return reduce_mod(inv_.disc, p) != 0;
}

std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& curve) {
    const auto& c = curve.coefficients();
    return os << "[" << c.a1 << "," << c.a2 << "," << c.a3 << "," << c.a4 << "," << c.a6 << "]";
}

std::uint64_t count_points(const WeierstrassCurve& curve, std::uint64_t p) {
    if (!is_prime(p)) throw InvalidInput("count_points: " + std::to_string(p) + " is not prime");
    if (p > (1u << 20)) throw InvalidInput("count_points: p too large for enumeration");
    if (!curve.has_good_reduction(p))
        throw InvalidInput("count_points: bad reduction at p = " + std::to_string(p));
    const auto& c = curve.coefficients();
    const std::uint64_t a1 = reduce_mod(c.a1, p), a2 = reduce_mod(c.a2, p), a3 = reduce_mod(c.a3, p),
                        a4 = reduce_mod(c.a4, p), a6 = reduce_mod(c.a6, p);
    std::uint64_t count = 1;  // point at infinity
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t rhs = (((x + a2) % p * x % p + a4) % p * x % p + a6) % p;
        const std::uint64_t lin = (a1 * x + a3) % p;
        for (std::uint64_t y = 0; y < p; ++y) {
            if ((y * ((y + lin) % p)) % p == rhs) ++count;
        }
    }
    return count;
}

std::int64_t trace_of_frobenius(const WeierstrassCurve& curve, std::uint64_t p) {
    return static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(count_points(curve, p));
}

bool is_semistable_certificate(const WeierstrassCurve& curve) {
    return std::gcd(curve.c4(), curve.disc()) == 1;
}

WeierstrassCurve daniels_t(std::int64_t t) { return WeierstrassCurve({1, 0, 0, 0, t}); }

WeierstrassCurve semistable_s(std::int64_t s) { return WeierstrassCurve({0, 1, 1, 0, s}); }

WeierstrassCurve uv_family(std::int64_t u, std::int64_t v) { return WeierstrassCurve({0, v, u, 0, 0}); }

WeierstrassCurve make_family(Family family, std::span<const std::int64_t> params) {
    const std::size_t want = family == Family::UV ? 2 : 1;
    if (params.size() != want)
        throw InvalidInput(std::string(family_name(family)) + " takes " + std::to_string(want) +
                           " parameter(s)");
    switch (family) {
        case Family::DanielsT: return daniels_t(params[0]);
        case Family::SemistableS: return semistable_s(params[0]);
        case Family::UV: return uv_family(params[0], params[1]);
    }
    throw InvalidInput("unknown family");
}

Family parse_family(std::string_view name) {
    if (name == "daniels" || name == "daniels_t") return Family::DanielsT;
    if (name == "semistable" || name == "semistable_s") return Family::SemistableS;
    if (name == "uv") return Family::UV;
    throw InvalidInput("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::DanielsT: return "daniels";
        case Family::SemistableS: return "semistable";
        case Family::UV: return "uv";
    }
    return "?";
}

}  // namespace divfield
