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

#include "divfield/obstruction.hpp"

#include <numeric>
#include <string>

#include "divfield/arith.hpp"
#include "divfield/errors.hpp"
#include "engine.hpp"

namespace divfield {

namespace {

using u128 = unsigned __int128;

}  // namespace

std::string_view to_string(ImageAssumption image) {
    return image == ImageAssumption::FullGL2 ? "full" : "index2";
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Obstruction: return "Obstruction";
        case Classification::ObstructionOnlyFullImage: return "ObstructionOnlyFullImage";
        case Classification::NoObstruction: return "NoObstruction";
    }
    return "?";
}

ImageAssumption parse_image(std::string_view name) {
    if (name == "full" || name == "FullGL2") return ImageAssumption::FullGL2;
    if (name == "index2" || name == "Index2Subgroup") return ImageAssumption::Index2Subgroup;
    throw InvalidInput("unknown image assumption '" + std::string(name) + "' (expected full or index2)");
}

std::string_view to_string(PrimeStatus status) {
    switch (status) {
        case PrimeStatus::Confirmed: return "CONFIRMED";
        case PrimeStatus::Conditional: return "CONDITIONAL";
        case PrimeStatus::NotObstructed: return "NONE";
        case PrimeStatus::SkippedDividesN: return "SKIPPED (p divides n)";
        case PrimeStatus::SkippedBadReduction: return "SKIPPED (bad reduction)";
    }
    return "?";
}

namespace detail {

Verdict evaluate(const FrobeniusDatum& datum, const IntMatrix2& sigma, std::uint64_t n,
                 ImageAssumption image) {
    const std::uint64_t p = datum.p();
    if (n < 2) throw InvalidInput("n must be at least 2");
    if (std::gcd(n, p) != 1)
        throw InvalidInput("n = " + std::to_string(n) + " is not coprime to p = " + std::to_string(p));

    Verdict v;
    v.n = n;
    v.p = p;
    v.image = image;
    v.residue_degree = order_mod(MatModN(sigma, n));
    const std::uint64_t group = gl2_order(n);
    if (group % v.residue_degree != 0) throw ArithmeticError("element order does not divide |GL_2|");
    v.irred_supply = irred_count(v.residue_degree, p);

    const u128 f = v.residue_degree;
    const bool full = v.irred_supply < group / v.residue_degree;
    const bool half = 2 * f * v.irred_supply < group;

    v.degree = image == ImageAssumption::FullGL2 ? group : group / 2;
    v.num_primes = v.degree / v.residue_degree;
    v.split_exact = v.degree % v.residue_degree == 0;
    if (half)
        v.classification = Classification::Obstruction;
    else if (full && image == ImageAssumption::FullGL2)
        v.classification = Classification::ObstructionOnlyFullImage;
    else
        v.classification = Classification::NoObstruction;
    return v;
}

void require_scan_range(std::uint64_t n_max) {
    if (n_max < 2) throw InvalidInput("n_max must be at least 2");
    if (n_max > 1'000'000) throw InvalidInput("n_max above 10^6 is not supported");
}

}  // namespace detail

Verdict test(const FrobeniusDatum& datum, std::uint64_t n, ImageAssumption image) {
    return detail::evaluate(datum, sigma(datum), n, image);
}

SupersingularCheck supersingular_check(std::uint64_t p) {
    if (p <= 3) throw InvalidInput("supersingular check requires p > 3");
    if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
    SupersingularCheck out;
    out.p = p;
    for (const std::uint64_t b : enumerate_b(p, 0)) {
        const std::uint64_t ord = order_mod(MatModN(sigma(FrobeniusDatum(p, 0, b)), p + 1));
        if (ord != 2)
            throw ArithmeticError("supersingular Frobenius with b = " + std::to_string(b) + " has order " +
                                  std::to_string(ord) + " mod p+1");
        if (b == 1)
            out.order_b1 = ord;
        else
            out.order_b2 = ord;
    }
    out.group_order = gl2_order(p + 1);
    out.num_primes = out.group_order / 2;
    out.irred_supply = irred_count(2, p);
    out.obstructed = out.num_primes > out.irred_supply;
    return out;
}

CorollaryThreshold corollary_threshold(std::uint64_t index) {
    if (index == 0) throw InvalidInput("index must be positive");
    constexpr std::uint64_t kSearchLimit = std::uint64_t{1} << 28;

    auto exact = [index](std::uint64_t p) {
        return static_cast<u128>(gl2_order(p + 1)) > static_cast<u128>(4) * index * irred_count(2, p);
    };
    auto closed_form = [index](std::uint64_t p) {
        const u128 q = p + 1;
        return 3 * q * q * q * q > static_cast<u128>(16) * index * (static_cast<u128>(p) * p - p);
    };

    CorollaryThreshold out;
    out.index = index;
    for (std::uint64_t p = 5; p < kSearchLimit; p += 2) {
        if (!is_prime(p)) continue;
        if (!out.prime && exact(p)) out.prime = p;
        if (!out.closed_form_prime && closed_form(p)) out.closed_form_prime = p;
        if (out.prime && out.closed_form_prime) break;
    }
    if (!out.prime || !out.closed_form_prime) throw InvalidInput("index too large for threshold search");

    const std::uint64_t p = out.prime;
    out.group_order = gl2_order(p + 1);
    out.irred_supply = irred_count(2, p);
    out.closed_form_holds = closed_form(p);
    const u128 q = p + 1;
    out.group_bound_holds = 8 * static_cast<u128>(out.group_order) >= 3 * q * q * q * q;
    return out;
}

std::vector<PrimeReport> essential_divisor_scan(const WeierstrassCurve& curve, std::uint64_t n,
                                                std::uint64_t p_max, ImageAssumption image) {
    if (n < 2) throw InvalidInput("n must be at least 2");
    if (p_max < 2) throw InvalidInput("p_max must be at least 2");
    if (p_max > 100'000) throw InvalidInput("p_max above 10^5 is not supported by brute-force counting");

    std::vector<PrimeReport> out;
    for (const std::uint64_t p : primes_in_range(2, p_max)) {
        PrimeReport r;
        r.p = p;
        if (n % p == 0) {
            r.status = PrimeStatus::SkippedDividesN;
        } else if (!curve.has_good_reduction(p)) {
            r.status = PrimeStatus::SkippedBadReduction;
        } else {
            r.trace = trace_of_frobenius(curve, p);
            std::size_t hits = 0;
            for (const std::uint64_t b : enumerate_b(p, *r.trace)) {
                r.data.emplace_back(p, *r.trace, b);
                r.verdicts.push_back(test(r.data.back(), n, image));
                hits += r.verdicts.back().obstructed();
            }
            if (hits == 0)
                r.status = PrimeStatus::NotObstructed;
            else if (hits == r.verdicts.size())
                r.status = PrimeStatus::Confirmed;
            else
                r.status = PrimeStatus::Conditional;
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace divfield
