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

#include "divfield/gl2.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "divfield/arith.hpp"
#include "divfield/errors.hpp"

namespace divfield {

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) {
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

MatModN::MatModN(const IntMatrix2& m, std::uint64_t modulus) : MatModN(m.a, m.b, m.c, m.d, modulus) {}

MatModN::MatModN(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint64_t modulus)
    : modulus_(modulus) {
    if (modulus < 2) throw InvalidInput("MatModN: modulus must be at least 2");
    if (modulus > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw InvalidInput("MatModN: modulus too large");
    e_ = {reduce_mod(a, modulus), reduce_mod(b, modulus), reduce_mod(c, modulus), reduce_mod(d, modulus)};
}

MatModN MatModN::identity(std::uint64_t modulus) { return MatModN(1, 0, 0, 1, modulus); }

std::uint64_t MatModN::trace() const { return (e_[0] + e_[3]) % modulus_; }

std::uint64_t MatModN::det() const {
    const std::uint64_t ad = mul_mod(e_[0], e_[3], modulus_);
    const std::uint64_t bc = mul_mod(e_[1], e_[2], modulus_);
    return (ad + modulus_ - bc) % modulus_;
}

bool MatModN::is_identity() const { return e_[0] == 1 && e_[1] == 0 && e_[2] == 0 && e_[3] == 1; }

bool MatModN::is_invertible() const { return std::gcd(det(), modulus_) == 1; }

MatModN MatModN::reduce(std::uint64_t m) const {
    if (m < 2 || modulus_ % m != 0)
        throw InvalidInput("MatModN::reduce: " + std::to_string(m) + " does not divide " +
                           std::to_string(modulus_));
    return MatModN(std::array<std::uint64_t, 4>{e_[0] % m, e_[1] % m, e_[2] % m, e_[3] % m}, m);
}

MatModN MatModN::pow(std::uint64_t k) const {
    MatModN result = identity(modulus_);
    MatModN base = *this;
    while (k > 0) {
        if (k & 1) result = mat_mul(result, base);
        k >>= 1;
        if (k) base = mat_mul(base, base);
    }
    return result;
}

MatModN mat_mul(const MatModN& x, const MatModN& y) {
    if (x.modulus_ != y.modulus_)
        throw InvalidInput("mat_mul: modulus mismatch (" + std::to_string(x.modulus_) + " vs " +
                           std::to_string(y.modulus_) + ")");
    const std::uint64_t n = x.modulus_;
    const auto& a = x.e_;
    const auto& b = y.e_;
    auto dot = [n](std::uint64_t p, std::uint64_t q, std::uint64_t r, std::uint64_t s) {
        return (mul_mod(p, q, n) + mul_mod(r, s, n)) % n;
    };
    return MatModN(std::array<std::uint64_t, 4>{dot(a[0], b[0], a[1], b[2]), dot(a[0], b[1], a[1], b[3]),
                    dot(a[2], b[0], a[3], b[2]), dot(a[2], b[1], a[3], b[3])},
                   n);
}

std::ostream& operator<<(std::ostream& os, const MatModN& m) {
    return os << "[[" << m(0, 0) << "," << m(0, 1) << "],[" << m(1, 0) << "," << m(1, 1) << "]] mod "
              << m.modulus();
}

CharPoly char_poly(const MatModN& m) { return {m.trace(), m.det()}; }

namespace {

std::uint64_t local_order(const MatModN& m) {
    const std::uint64_t group_order = gl2_order(m.modulus());
    std::uint64_t order = group_order;
    for (const auto& [r, e] : factorize(group_order).factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (!m.pow(order / r).is_identity()) break;
            order /= r;
        }
    }
    return order;
}

}  // namespace

std::uint64_t order_mod(const MatModN& m) {
    if (!m.is_invertible())
        throw InvalidInput("order_mod: determinant " + std::to_string(m.det()) + " is not a unit mod " +
                           std::to_string(m.modulus()));
    std::uint64_t order = 1;
    for (const auto& [q, e] : factorize(m.modulus()).factors) {
        std::uint64_t qe = 1;
        for (unsigned i = 0; i < e; ++i) qe *= q;
        order = std::lcm(order, local_order(m.reduce(qe)));
    }
    return order;
}

namespace reference {

std::uint64_t order_by_iteration(const MatModN& m) {
    if (!m.is_invertible())
        throw InvalidInput("order_by_iteration: matrix is not invertible mod " + std::to_string(m.modulus()));
    const std::uint64_t bound = gl2_order(m.modulus());
    MatModN power = m;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (power.is_identity()) return k;
        power = power * m;
    }
    throw ArithmeticError("order_by_iteration: no identity power up to the group order");
}

}  // namespace reference

}  // namespace divfield
