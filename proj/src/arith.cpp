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

#include "divfield/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "divfield/errors.hpp"

namespace divfield {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
    return __builtin_mul_overflow(a, b, &out);
}

// Inverse of a modulo m, assuming gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    i128 old_r = static_cast<i128>(a % m), r = m;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 q = old_r / r;
        i128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    i128 inv = old_s % static_cast<i128>(m);
    if (inv < 0) inv += m;
    return static_cast<std::uint64_t>(inv);
}

}  // namespace

std::uint64_t Factorization::product() const {
    std::uint64_t acc = 1;
    for (const auto& [q, e] : factors)
        for (unsigned i = 0; i < e; ++i) acc *= q;
    return acc;
}

Factorization factorize(std::uint64_t m) {
    if (m == 0) throw InvalidInput("factorize: argument must be positive");
    Factorization f;
    f.value = m;
    for (std::uint64_t q = 2; q <= m / q; q += (q == 2 ? 1 : 2)) {
        if (m % q != 0) continue;
        unsigned e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        f.factors.push_back({q, e});
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t q = 3; q <= m / q; q += 2)
        if (m % q == 0) return false;
    return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = lo; q <= hi; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

int mobius(std::uint64_t m) {
    const Factorization f = factorize(m);
    for (const auto& pp : f.factors)
        if (pp.exponent > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [q, e] : f.factors) {
        const std::size_t base = out.size();
        std::uint64_t qk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            qk *= q;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * qk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) { return divisors(factorize(m)); }

std::uint64_t isqrt(std::uint64_t m) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(m)));
    while (r > 0 && (r > m / r)) --r;
    while ((r + 1) <= m / (r + 1)) ++r;
    return r;
}

std::uint64_t gl2_order(std::uint64_t n) {
    if (n < 2) throw InvalidInput("gl2_order: n must be at least 2, got " + std::to_string(n));
    std::uint64_t order = 1;
    for (const auto& [q, e] : factorize(n).factors) {
        std::uint64_t local = (q * q - 1) * (q * q - q);
        for (unsigned i = 1; i < e; ++i) {
            if (mul_overflows(local, q * q * q * q, local))
                throw ArithmeticError("gl2_order: overflow for n = " + std::to_string(n));
        }
        if (mul_overflows(order, local, order))
            throw ArithmeticError("gl2_order: overflow for n = " + std::to_string(n));
    }
    return order;
}

std::uint64_t irred_count(std::uint64_t m, std::uint64_t p) {
    if (m == 0) throw InvalidInput("irred_count: degree must be positive");
    if (p < 2) throw InvalidInput("irred_count: p must be prime");

    // Every term p^d with d | m is at most p^m; keep p^m below 2^126 so the
    // signed 128-bit sum cannot overflow.
    constexpr u128 kLimit = static_cast<u128>(1) << 126;
    u128 pm = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (pm > kLimit / p) return kCountSaturated;
        pm *= p;
    }

    i128 sum = 0;
    const Factorization fm = factorize(m);
    for (const std::uint64_t d : divisors(fm)) {
        const int mu = mobius(m / d);
        if (mu == 0) continue;
        i128 pd = 1;
        for (std::uint64_t i = 0; i < d; ++i) pd *= p;
        sum += mu > 0 ? pd : -pd;
    }
    if (sum <= 0 || sum % m != 0)
        throw ArithmeticError("irred_count: Moebius sum not divisible by m = " + std::to_string(m));
    const i128 count = sum / m;
    if (count >= static_cast<i128>(kCountSaturated)) return kCountSaturated;
    return static_cast<std::uint64_t>(count);
}

Residue crt_pairwise(std::span<const Residue> residues) {
    Residue acc{0, 1};
    for (const Residue& r : residues) {
        if (r.modulus == 0) throw InvalidInput("crt_pairwise: zero modulus");
        if (std::gcd(acc.modulus, r.modulus) != 1)
            throw InvalidInput("crt_pairwise: moduli " + std::to_string(acc.modulus) + " and " +
                               std::to_string(r.modulus) + " are not coprime");
        std::uint64_t combined;
        if (mul_overflows(acc.modulus, r.modulus, combined))
            throw ArithmeticError("crt_pairwise: product of moduli overflows");
        // x = acc.value + acc.modulus * t, with t = (r - acc) / acc.modulus mod r.modulus
        const std::uint64_t target = r.value % r.modulus;
        const std::uint64_t have = acc.value % r.modulus;
        const std::uint64_t diff = (target + r.modulus - have) % r.modulus;
        const std::uint64_t t = mul_mod(diff, inverse_mod(acc.modulus, r.modulus), r.modulus);
        const u128 x = static_cast<u128>(acc.value) + static_cast<u128>(acc.modulus) * t;
        acc = {static_cast<std::uint64_t>(x % combined), combined};
    }
    return acc;
}

}  // namespace divfield
