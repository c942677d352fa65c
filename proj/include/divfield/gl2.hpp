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

#ifndef DIVFIELD_GL2_HPP
#define DIVFIELD_GL2_HPP

#include <array>
#include <cstdint>
#include <iosfwd>

namespace divfield {

/// Integral 2x2 matrix [[a, b], [c, d]].
struct IntMatrix2 {
    std::int64_t a = 0, b = 0, c = 0, d = 0;

    std::int64_t trace() const { return a + d; }
    std::int64_t det() const { return a * d - b * c; }

    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m);

/* A 2x2 matrix over Z/nZ.
 *
 * Entries are stored row-major as least nonnegative residues; constructors
 * accept arbitrary signed integers and reduce them. The modulus must be at
 * least 2.
 */
class MatModN {
public:
    MatModN(const IntMatrix2& m, std::uint64_t modulus);
    MatModN(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint64_t modulus);

    static MatModN identity(std::uint64_t modulus);

    std::uint64_t modulus() const { return modulus_; }
    const std::array<std::uint64_t, 4>& entries() const { return e_; }
    std::uint64_t operator()(int row, int col) const { return e_[2 * row + col]; }

    std::uint64_t trace() const;
    std::uint64_t det() const;
    bool is_identity() const;
    bool is_invertible() const;

    /// Image under Z/nZ -> Z/mZ; m must divide the modulus.
    MatModN reduce(std::uint64_t m) const;

    MatModN pow(std::uint64_t k) const;

    friend bool operator==(const MatModN&, const MatModN&) = default;

private:
    MatModN(std::array<std::uint64_t, 4> e, std::uint64_t modulus) : e_(e), modulus_(modulus) {}

    std::array<std::uint64_t, 4> e_{};
    std::uint64_t modulus_ = 2;

    friend MatModN mat_mul(const MatModN& lhs, const MatModN& rhs);
};

/// Entrywise-reduced product; rejects mismatched moduli.
MatModN mat_mul(const MatModN& lhs, const MatModN& rhs);
inline MatModN operator*(const MatModN& lhs, const MatModN& rhs) { return mat_mul(lhs, rhs); }

std::ostream& operator<<(std::ostream& os, const MatModN& m);

struct CharPoly {
    std::uint64_t trace;
    std::uint64_t det;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Coefficients of x^2 - trace x + det, reduced mod n.
CharPoly char_poly(const MatModN& m);

/* Order of m in GL_2(Z/nZ).
 *
 * The modulus is split into prime powers q^e; in each factor the order is
 * found by starting from |GL_2(Z/q^eZ)| and stripping prime factors while the
 * power stays the identity. The result is the lcm of the local orders.
 * Rejects matrices whose determinant is not a unit.
 */
std::uint64_t order_mod(const MatModN& m);

namespace reference {

/// Least k >= 1 with m^k = I, by repeated multiplication. Serial baseline for
/// order_mod; cost is linear in the order.
std::uint64_t order_by_iteration(const MatModN& m);

}  // namespace reference

}  // namespace divfield

#endif  // DIVFIELD_GL2_HPP
