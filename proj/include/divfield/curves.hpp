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

#ifndef DIVFIELD_CURVES_HPP
#define DIVFIELD_CURVES_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace divfield {

/// Coefficients of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCoefficients {
    std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

    friend bool operator==(const WeierstrassCoefficients&, const WeierstrassCoefficients&) = default;
};

struct CurveInvariants {
    std::int64_t b2, b4, b6, b8;
    std::int64_t c4;
    std::int64_t disc;
};

/* Standard invariants of a long Weierstrass model:
 *
 *   b2 = a1^2 + 4a2      b4 = 2a4 + a1a3      b6 = a3^2 + 4a6
 *   b8 = (b2 b6 - b4^2)/4
 *   c4 = b2^2 - 24 b4
 *   disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
 *
 * Evaluated in 128-bit; throws ArithmeticError if a value leaves int64.
 */
CurveInvariants invariants(const WeierstrassCoefficients& coeffs);

/// A nonsingular integral Weierstrass model over Q.
class WeierstrassCurve {
public:
    /// Throws InvalidInput when the discriminant vanishes.
    explicit WeierstrassCurve(const WeierstrassCoefficients& coeffs);

    const WeierstrassCoefficients& coefficients() const { return coeffs_; }
    std::int64_t c4() const { return inv_.c4; }
    std::int64_t disc() const { return inv_.disc; }
    const CurveInvariants& invariants() const { return inv_; }

    /// Good reduction of this model at p, i.e. disc != 0 mod p. No minimal
    /// model is computed.
    bool has_good_reduction(std::uint64_t p) const;

private:
    WeierstrassCoefficients coeffs_;
    CurveInvariants inv_;
};

std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& curve);

/// #E(F_p) by enumerating all (x, y) in F_p^2, plus the point at infinity.
/// Rejects composite p and bad reduction.
std::uint64_t count_points(const WeierstrassCurve& curve, std::uint64_t p);

/// a_p = p + 1 - #E(F_p).
std::int64_t trace_of_frobenius(const WeierstrassCurve& curve, std::uint64_t p);

/// gcd(c4, disc) = 1. A sufficient condition for semistability only; false
/// means "not certified".
bool is_semistable_certificate(const WeierstrassCurve& curve);

// Named one- and two-parameter families.
enum class Family { DanielsT, SemistableS, UV };

/// y^2 + xy = x^3 + t
WeierstrassCurve daniels_t(std::int64_t t);
/// y^2 + y = x^3 + x^2 + s; trace 2 at p = 2 only for odd s (even s gives -2)
WeierstrassCurve semistable_s(std::int64_t s);
/// y^2 + uy = x^3 + vx^2
WeierstrassCurve uv_family(std::int64_t u, std::int64_t v);

/// Dispatch by family; params holds {t}, {s} or {u, v}.
WeierstrassCurve make_family(Family family, std::span<const std::int64_t> params);

/// Accepts "daniels", "semistable", "uv" (and the long names daniels_t,
/// semistable_s).
Family parse_family(std::string_view name);
std::string_view family_name(Family family);

}  // namespace divfield

#endif  // DIVFIELD_CURVES_HPP
