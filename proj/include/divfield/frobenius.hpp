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

#ifndef DIVFIELD_FROBENIUS_HPP
#define DIVFIELD_FROBENIUS_HPP

#include <cstdint>
#include <vector>

#include "divfield/gl2.hpp"

namespace divfield {

enum class Reduction { Ordinary, Supersingular };

struct TraceCandidate {
    std::int64_t trace;
    Reduction kind;

    friend bool operator==(const TraceCandidate&, const TraceCandidate&) = default;
};

/// Every a with a^2 <= 4p, ascending; a = 0 mod p is supersingular.
std::vector<TraceCandidate> admissible_traces(std::uint64_t p);

/// True when a^2 <= 4p.
bool satisfies_hasse_bound(std::uint64_t p, std::int64_t a);

/* Admissible indices b of Z[pi] in an endomorphism order.
 *
 * These are the b >= 1 with b^2 | (a^2 - 4p) and (a^2 - 4p)/b^2 = 0 or 1
 * mod 4, i.e. the orders of the imaginary quadratic field Q(pi) containing
 * Z[pi]. Rejects p that is not prime and a outside the Hasse interval.
 */
std::vector<std::uint64_t> enumerate_b(std::uint64_t p, std::int64_t a);

/* Reduction datum of an elliptic curve at a good prime p.
 *
 *   delta_pi  = a^2 - 4p                  (Weil polynomial discriminant)
 *   delta_end = delta_pi / b^2            (discriminant of End(E))
 *   parity    = delta_end mod 4, in {0, 1}
 *
 * so that 4p = a^2 - delta_end * b^2. Construction validates all of this.
 */
class FrobeniusDatum {
public:
    /// Throws InvalidInput when (p, a, b) is not an admissible datum.
    FrobeniusDatum(std::uint64_t p, std::int64_t a, std::uint64_t b);

    std::uint64_t p() const { return p_; }
    std::int64_t trace() const { return a_; }
    std::uint64_t index() const { return b_; }
    std::int64_t delta_pi() const { return delta_pi_; }
    std::int64_t delta_end() const { return delta_end_; }
    int delta_parity() const { return parity_; }
    Reduction kind() const;

    friend bool operator==(const FrobeniusDatum&, const FrobeniusDatum&) = default;

private:
    std::uint64_t p_;
    std::int64_t a_;
    std::uint64_t b_;
    std::int64_t delta_pi_;
    std::int64_t delta_end_;
    int parity_;
};

/// All admissible data at p in table order: |a| ascending, then b
/// ascending, then the positive trace before the negative one.
std::vector<FrobeniusDatum> admissible_data(std::uint64_t p);

/* Integral matrix representing Frobenius on prime-to-p torsion:
 *
 *   [ (a + b*parity)/2            b              ]
 *   [ b*(delta_end - parity)/4    (a - b*parity)/2 ]
 *
 * Trace a, determinant p. Throws ArithmeticError if a division is inexact.
 */
IntMatrix2 sigma(const FrobeniusDatum& datum);

}  // namespace divfield

#endif  // DIVFIELD_FROBENIUS_HPP
