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

#ifndef DIVFIELD_ARITH_HPP
#define DIVFIELD_ARITH_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace divfield {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/* Canonical factorization of a positive integer.
 *
 * factors are listed in strictly increasing prime order, every exponent is
 * at least one, and the product of prime^exponent is value. The empty list
 * is the factorization of 1.
 */
struct Factorization {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;

    std::uint64_t product() const;
};

/// Trial division. Intended for arguments well below 2^40.
Factorization factorize(std::uint64_t m);

bool is_prime(std::uint64_t m);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

int mobius(std::uint64_t m);

/// All positive divisors of m in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t m);
std::vector<std::uint64_t> divisors(const Factorization& f);

/// floor(sqrt(m)).
std::uint64_t isqrt(std::uint64_t m);

/// |GL_2(Z/nZ)| = prod over q^e || n of q^{4(e-1)} (q^2-1)(q^2-q).
/// Rejects n < 2 and throws ArithmeticError on 64-bit overflow.
std::uint64_t gl2_order(std::uint64_t n);

/// Value returned by irred_count once the true count no longer fits.
inline constexpr std::uint64_t kCountSaturated = std::numeric_limits<std::uint64_t>::max();

/* Number of monic irreducible polynomials of degree m over F_p,
 *
 *     (1/m) * sum_{d | m} mu(m/d) p^d.
 *
 * The sum is evaluated exactly in 128-bit arithmetic whenever p^m < 2^126.
 * Beyond that (and whenever the exact result does not fit in 64 bits) the
 * function returns kCountSaturated; the true count then exceeds 2^64, which
 * is all any comparison against a prime count needs.
 */
std::uint64_t irred_count(std::uint64_t m, std::uint64_t p);

struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;

    friend bool operator==(const Residue&, const Residue&) = default;
};

/// Combine residues modulo pairwise coprime moduli into the unique residue
/// modulo their product. Rejects non-coprime or zero moduli.
Residue crt_pairwise(std::span<const Residue> residues);

/// Least nonnegative residue of v modulo m (m >= 1).
constexpr std::uint64_t reduce_mod(std::int64_t v, std::uint64_t m) {
    const auto sm = static_cast<std::int64_t>(m);
    std::int64_t r = v % sm;
    return static_cast<std::uint64_t>(r < 0 ? r + sm : r);
}

constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace divfield

#endif  // DIVFIELD_ARITH_HPP
