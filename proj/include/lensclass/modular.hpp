/*
   Copyright 2026 The lensclass Authors

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

#ifndef LENSCLASS_MODULAR_HPP
#define LENSCLASS_MODULAR_HPP

// Units modulo an odd square-free d, the partition Q_d^k of the units into
// classes q ~ +-a^k q, exponent subgroups of Aut(C_d), and the related
// gcd bookkeeping.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lensclass/errors.hpp"

namespace lensclass {

/// Upper bound on moduli accepted by the brute-force unit routines.
inline constexpr std::uint64_t kMaxModulus = 100000;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Reduce a signed integer into [0, m).
inline std::uint64_t residue(std::int64_t a, std::uint64_t m) {
    const auto sm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((a % sm) + sm) % sm);
}

/// Distinct prime factors in increasing order (trial division).
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        f.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) f.push_back(n);
    return f;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline bool is_square_free(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

/// Positive divisors in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t a = 1; a * a <= n; ++a) {
        if (n % a) continue;
        small.push_back(a);
        if (a != n / a) large.push_back(n / a);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Euler's phi via the prime factorization.
inline std::uint64_t totient(std::uint64_t d) {
    if (d == 0) throw PreconditionError("totient: d must be positive");
    std::uint64_t phi = d;
    for (auto p : prime_factors(d)) phi = phi / p * (p - 1);
    return phi;
}

/// Throws unless d is odd, square-free and in (1, cap].
inline void require_odd_square_free(std::uint64_t d, const std::string& name = "d",
                                    std::uint64_t cap = kMaxModulus) {
    if (d <= 1) throw PreconditionError(name + " must be > 1 (got " + std::to_string(d) + ")");
    if (d % 2 == 0) throw PreconditionError(name + " must be odd (got " + std::to_string(d) + ")");
    if (!is_square_free(d))
        throw PreconditionError(name + " must be square-free (got " + std::to_string(d) + ")");
    if (d > cap)
        throw PreconditionError(name + " exceeds the supported bound " + std::to_string(cap) + " (got " +
                                std::to_string(d) + ")");
}

struct UnitGroupModD {
    std::uint64_t d = 0;
    std::vector<std::uint64_t> units;             // sorted residues coprime to d
    std::vector<std::uint64_t> crt_factors;       // prime factors p_i of d
    std::vector<std::uint64_t> component_orders;  // p_i - 1, orders of the cyclic CRT components

    std::uint64_t order() const noexcept { return units.size(); }
};

inline UnitGroupModD unit_group(std::uint64_t d) {
    require_odd_square_free(d);
    UnitGroupModD g;
    g.d = d;
    for (std::uint64_t a = 1; a < d; ++a)
        if (std::gcd(a, d) == 1) g.units.push_back(a);
    g.crt_factors = prime_factors(d);
    for (auto p : g.crt_factors) g.component_orders.push_back(p - 1);
    return g;
}

/// The subgroup {+-a^k} of the units, as a membership table indexed by residue.
inline std::vector<bool> signed_power_subgroup(const UnitGroupModD& g, std::uint64_t k) {
    std::vector<bool> member(g.d, false);
    for (auto a : g.units) {
        const std::uint64_t p = pow_mod(a, k, g.d);
        member[p] = true;
        member[g.d - p] = true;
    }
    return member;
}

/// Q_d^k: classes are cosets of the subgroup {+-a^k}; each class is sorted
/// and classes are ordered by their smallest member, the representative.
struct PartitionQdk {
    std::uint64_t d = 0;
    std::uint64_t k = 0;
    std::vector<std::vector<std::uint64_t>> classes;
    std::vector<std::uint64_t> representatives;

    std::size_t size() const noexcept { return classes.size(); }
};

inline PartitionQdk qdk_partition(std::uint64_t d, std::uint64_t k) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    const UnitGroupModD g = unit_group(d);
    const std::vector<bool> member = signed_power_subgroup(g, k);
    std::vector<std::uint64_t> subgroup;
    for (std::uint64_t h = 1; h < d; ++h)
        if (member[h]) subgroup.push_back(h);

    PartitionQdk part;
    part.d = d;
    part.k = k;
    std::vector<bool> assigned(d, false);
    for (auto q : g.units) {
        if (assigned[q]) continue;
        std::vector<std::uint64_t> cls;
        cls.reserve(subgroup.size());
        for (auto h : subgroup) {
            const std::uint64_t x = mul_mod(q, h, d);
            assigned[x] = true;
            cls.push_back(x);
        }
        std::sort(cls.begin(), cls.end());
        part.representatives.push_back(cls.front());
        part.classes.push_back(std::move(cls));
    }
    return part;
}

/// Smallest member of the class of q in Q_d^k.
inline std::uint64_t qdk_class_of(std::uint64_t d, std::uint64_t k, std::int64_t q) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    const UnitGroupModD g = unit_group(d);
    const std::uint64_t r = residue(q, d);
    if (std::gcd(r, d) != 1)
        throw PreconditionError("q = " + std::to_string(q) + " is not a unit modulo " + std::to_string(d));
    const std::vector<bool> member = signed_power_subgroup(g, k);
    std::uint64_t best = d;
    for (std::uint64_t h = 1; h < d; ++h)
        if (member[h]) best = std::min(best, mul_mod(r, h, d));
    return best;
}

struct ExponentSubgroup {
    std::uint64_t order = 0;
    std::vector<std::uint64_t> elements;
};

/// {a in Z_d^x : a^e = 1}.
inline ExponentSubgroup exponent_subgroup(std::uint64_t d, std::uint64_t e) {
    if (e < 1) throw PreconditionError("exponent must be >= 1");
    const UnitGroupModD g = unit_group(d);
    ExponentSubgroup b;
    for (auto a : g.units)
        if (pow_mod(a, e, d) == 1) b.elements.push_back(a);
    b.order = b.elements.size();
    return b;
}

/// 8 gcd(k, phi(d)/2): bound on point-preimage cardinality in one stratum.
inline std::uint64_t indeterminacy_bound(std::uint64_t d, std::uint64_t k) {
    require_odd_square_free(d);
    if (k <= 1) throw PreconditionError("k must be > 1 (got " + std::to_string(k) + ")");
    return 8 * std::gcd(k, totient(d) / 2);
}

}  // namespace lensclass

#endif
