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

#ifndef DIVFIELD_OBSTRUCTION_HPP
#define DIVFIELD_OBSTRUCTION_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "divfield/curves.hpp"
#include "divfield/frobenius.hpp"
#include "divfield/gl2.hpp"

namespace divfield {

/* Model for [Q(E[n]) : Q].
 *
 * FullGL2 takes the mod-n representation to be surjective, so the degree is
 * |GL_2(Z/nZ)|. Index2Subgroup takes an image of index 2 (the worst case for
 * a Serre curve), halving the degree.
 */
enum class ImageAssumption { FullGL2, Index2Subgroup };

/* Obstruction: p is an essential discriminant divisor of Q(E[n]) even for an
 *     index-2 image, hence also for a surjective one.
 * ObstructionOnlyFullImage: obstruction under a surjective image that
 *     disappears once the prime count is halved.
 * NoObstruction: the irreducible polynomials of the residue degree suffice.
 */
enum class Classification { Obstruction, ObstructionOnlyFullImage, NoObstruction };

std::string_view to_string(ImageAssumption image);
std::string_view to_string(Classification c);
ImageAssumption parse_image(std::string_view name);

struct Verdict {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    ImageAssumption image = ImageAssumption::FullGL2;
    std::uint64_t residue_degree = 0;  // ord(sigma_p mod n)
    std::uint64_t degree = 0;          // modelled [Q(E[n]) : Q]
    std::uint64_t num_primes = 0;      // degree / residue_degree, floored
    bool split_exact = true;           // residue_degree divides degree
    std::uint64_t irred_supply = 0;    // irred_count(residue_degree, p), saturating
    Classification classification = Classification::NoObstruction;

    bool obstructed() const { return classification != Classification::NoObstruction; }
};

/* Splitting of p in Q(E[n]) against the supply of irreducible polynomials.
 *
 * The residue degree of every prime above p is f = ord(sigma_p mod n); there
 * are degree/f of them. If fewer than that many monic irreducibles of degree
 * f exist over F_p, no generator's minimal polynomial can mirror the
 * splitting and p divides the index of every monogenic order.
 *
 * Under FullGL2 the verdict is three-way (red entries are
 * ObstructionOnlyFullImage); under Index2Subgroup it is Obstruction or
 * NoObstruction. Rejects n < 2 and gcd(n, p) > 1.
 */
Verdict test(const FrobeniusDatum& datum, std::uint64_t n, ImageAssumption image);

/// One table row: every n in [2, n_max] coprime to p with an obstruction
/// under the surjective model, ascending.
struct ScanReport {
    FrobeniusDatum datum;
    IntMatrix2 sigma;
    std::uint64_t n_max = 0;
    std::vector<Verdict> obstructed;
};

/// OpenMP kernel over n. Output is independent of the thread count.
ScanReport scan(const FrobeniusDatum& datum, std::uint64_t n_max);

/// One ScanReport per admissible (a, b) at p, in table order.
std::vector<ScanReport> full_table(std::uint64_t p, std::uint64_t n_max);

namespace reference {

ScanReport scan(const FrobeniusDatum& datum, std::uint64_t n_max);
std::vector<ScanReport> full_table(std::uint64_t p, std::uint64_t n_max);

}  // namespace reference

struct SupersingularCheck {
    std::uint64_t p = 0;
    std::uint64_t order_b1 = 0;             // ord(sigma(p, 0, 1), p + 1)
    std::optional<std::uint64_t> order_b2;  // present iff p = 3 mod 4
    std::uint64_t group_order = 0;          // |GL_2(Z/(p+1)Z)|
    std::uint64_t num_primes = 0;           // group_order / 2
    std::uint64_t irred_supply = 0;         // irred_count(2, p) = (p^2 - p)/2
    bool obstructed = false;
};

/// Supersingular reduction at p > 3 forces a_p = 0; both possible Frobenius
/// matrices square to -p = 1 mod p+1. Throws ArithmeticError if an order is
/// not 2, InvalidInput for p <= 3 or composite p.
SupersingularCheck supersingular_check(std::uint64_t p);

struct CorollaryThreshold {
    std::uint64_t index = 0;
    std::uint64_t prime = 0;              // least prime p > 3 meeting the exact criterion
    std::uint64_t group_order = 0;        // |GL_2(Z/(p+1)Z)| at that prime
    std::uint64_t irred_supply = 0;       // irred_count(2, p)
    bool closed_form_holds = false;       // 3 (p+1)^4 > 16 I (p^2 - p) at that prime
    std::uint64_t closed_form_prime = 0;  // least prime p > 3 meeting the closed form
    bool group_bound_holds = false;       // |GL_2(Z/(p+1)Z)| >= (3/8)(p+1)^4 at that prime
};

/* Least prime p > 3 with |GL_2(Z/(p+1)Z)| / (4 I) > irred_count(2, p), where
 * I is the index of the adelic image. Evaluated with the exact group order;
 * the closed-form quartic inequality is reported alongside for comparison.
 */
CorollaryThreshold corollary_threshold(std::uint64_t index);

enum class PrimeStatus {
    Confirmed,           // every admissible b gives an obstruction
    Conditional,         // verdicts differ across admissible b
    NotObstructed,       // no admissible b gives an obstruction
    SkippedDividesN,     // p | n: ramified, out of reach
    SkippedBadReduction  // disc = 0 mod p for the given model
};

std::string_view to_string(PrimeStatus status);

struct PrimeReport {
    std::uint64_t p = 0;
    PrimeStatus status = PrimeStatus::NotObstructed;
    std::optional<std::int64_t> trace;
    std::vector<FrobeniusDatum> data;  // one per admissible b
    std::vector<Verdict> verdicts;     // parallel to data
};

/* For each prime p <= p_max: skip p | n and bad reduction; otherwise count
 * points to get a_p and test every admissible b_p (End(E) is not computed).
 */
std::vector<PrimeReport> essential_divisor_scan(const WeierstrassCurve& curve, std::uint64_t n,
                                                std::uint64_t p_max,
                                                ImageAssumption image = ImageAssumption::FullGL2);

}  // namespace divfield

#endif  // DIVFIELD_OBSTRUCTION_HPP
