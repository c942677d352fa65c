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

#include "divfield/frobenius.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "divfield/arith.hpp"
#include "divfield/errors.hpp"

namespace divfield {

namespace {

bool is_discriminant(std::int64_t d) {
    const std::int64_t r = ((d % 4) + 4) % 4;
    return r == 0 || r == 1;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
    if (p > (std::uint64_t{1} << 40)) throw InvalidInput("p = " + std::to_string(p) + " is too large");
}

void require_hasse(std::uint64_t p, std::int64_t a) {
    if (!satisfies_hasse_bound(p, a))
        throw InvalidInput("Hasse bound violated: a = " + std::to_string(a) + " but a^2 > 4p = " +
                           std::to_string(4 * p));
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
    if (num % den != 0) throw ArithmeticError(std::string("sigma: non-integral entry ") + what);
    return num / den;
}

}  // namespace

bool satisfies_hasse_bound(std::uint64_t p, std::int64_t a) {
    const auto abs_a = static_cast<std::uint64_t>(std::llabs(a));
    return abs_a <= 2 * isqrt(p) + 2 && abs_a * abs_a <= 4 * p;
}

std::vector<TraceCandidate> admissible_traces(std::uint64_t p) {
    require_prime(p);
    const auto bound = static_cast<std::int64_t>(isqrt(4 * p));
    const auto sp = static_cast<std::int64_t>(p);
    std::vector<TraceCandidate> out;
    for (std::int64_t a = -bound; a <= bound; ++a)
        out.push_back({a, a % sp == 0 ? Reduction::Supersingular : Reduction::Ordinary});
    return out;
}

std::vector<std::uint64_t> enumerate_b(std::uint64_t p, std::int64_t a) {
    require_prime(p);
    require_hasse(p, a);
    const std::int64_t delta_pi = a * a - 4 * static_cast<std::int64_t>(p);
    std::vector<std::uint64_t> out;
    for (std::int64_t b = 1; b * b <= -delta_pi; ++b) {
        if (delta_pi % (b * b) == 0 && is_discriminant(delta_pi / (b * b)))
            out.push_back(static_cast<std::uint64_t>(b));
    }
    return out;
}

FrobeniusDatum::FrobeniusDatum(std::uint64_t p, std::int64_t a, std::uint64_t b) : p_(p), a_(a), b_(b) {
    require_prime(p);
    require_hasse(p, a);
    if (b == 0) throw InvalidInput("b must be positive");
    delta_pi_ = a * a - 4 * static_cast<std::int64_t>(p);
    const auto b2 = static_cast<std::int64_t>(b * b);
    if (b > 1u << 21 || delta_pi_ % b2 != 0)
        throw InvalidInput("b^2 = " + std::to_string(b2) + " does not divide a^2 - 4p = " +
                           std::to_string(delta_pi_));
    delta_end_ = delta_pi_ / b2;
    if (!is_discriminant(delta_end_))
        throw InvalidInput("(a^2 - 4p)/b^2 = " + std::to_string(delta_end_) + " is not 0 or 1 mod 4");
    parity_ = static_cast<int>(((delta_end_ % 4) + 4) % 4);
}

Reduction FrobeniusDatum::kind() const {
    return a_ % static_cast<std::int64_t>(p_) == 0 ? Reduction::Supersingular : Reduction::Ordinary;
}

std::vector<FrobeniusDatum> admissible_data(std::uint64_t p) {
    std::vector<FrobeniusDatum> out;
    for (const auto& [a, kind] : admissible_traces(p))
        for (const std::uint64_t b : enumerate_b(p, a)) out.emplace_back(p, a, b);
    std::stable_sort(out.begin(), out.end(), [](const FrobeniusDatum& x, const FrobeniusDatum& y) {
        const auto ax = std::llabs(x.trace()), ay = std::llabs(y.trace());
        if (ax != ay) return ax < ay;
        if (x.index() != y.index()) return x.index() < y.index();
        return x.trace() > y.trace();
    });
    return out;
}

IntMatrix2 sigma(const FrobeniusDatum& datum) {
    const std::int64_t a = datum.trace();
    const auto b = static_cast<std::int64_t>(datum.index());
    const std::int64_t parity = datum.delta_parity();
    IntMatrix2 m{exact_div(a + b * parity, 2, "top-left"), b,
                 exact_div(b * (datum.delta_end() - parity), 4, "bottom-left"),
                 exact_div(a - b * parity, 2, "bottom-right")};
    if (m.trace() != a || m.det() != static_cast<std::int64_t>(datum.p()))
        throw ArithmeticError("sigma: trace/determinant mismatch");
    return m;
}

}  // namespace divfield
