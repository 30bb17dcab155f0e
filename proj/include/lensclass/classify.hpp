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

#ifndef LENSCLASS_CLASSIFY_HPP
#define LENSCLASS_CLASSIFY_HPP

// Free C_ell actions on S^1 x S^n for square-free odd ell > 1.
//
// For n even or n = 1 there is only the standard action T_ell. For
// n = 2k - 1 with k > 1 the nonstandard actions are parametrized, up to a
// finite indeterminacy, by the disjoint union over divisors 1 < d | ell of
//     Q_d^k x Z^{(d-1)/2} x H_0(C_2; Wh_0(C_d)),
// each point-preimage having cardinality dividing 8 gcd(k, phi(d)/2).

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lensclass/abelian.hpp"
#include "lensclass/classdata.hpp"
#include "lensclass/errors.hpp"
#include "lensclass/lens.hpp"
#include "lensclass/modular.hpp"

namespace lensclass {

/// Stand-in for H_0(C_2; Wh_0(C_d)) when no group can be supplied: composite
/// d, or prime d without a class-group record.
struct SymbolicH0 {
    std::string text;

    friend bool operator==(const SymbolicH0&, const SymbolicH0&) = default;
};

using H0Descriptor = std::variant<H0Result, SymbolicH0>;

inline std::string to_string(const H0Descriptor& h) {
    if (const auto* r = std::get_if<H0Result>(&h)) return r->to_string();
    return std::get<SymbolicH0>(h).text;
}

struct Stratum {
    std::uint64_t d = 0;
    std::uint64_t q_class = 0;
    std::uint64_t lattice_rank = 0;
    H0Descriptor h0_descriptor;
    std::uint64_t fiber_bound = 0;
};

struct ClassificationResult {
    enum class Kind { single_class, strata };

    std::uint64_t ell = 0;
    std::uint64_t n = 0;
    Kind kind = Kind::single_class;
    std::vector<Stratum> strata;
    bool countably_infinite = false;
    // Assumptions used to fill the H_0 descriptors.
    std::vector<std::string> assumptions;
};

inline constexpr const char* kRimAssumption =
    "Wh_0(C_p) is identified with the ideal class group Cl_p of Z[zeta_p] for prime p (Rim's theorem)";

namespace detail {
inline void require_ell(std::uint64_t ell) {
    if (ell <= 1 || ell % 2 == 0 || !is_square_free(ell) || ell > kMaxModulus)
        throw PreconditionError("ℓ must be square-free odd and > 1 (got " + std::to_string(ell) + ")");
}
}  // namespace detail

/// H_0 descriptor for one divisor d, using class-group records for prime d.
inline H0Descriptor h0_descriptor_for(std::uint64_t d, const ClassGroupDataset* data) {
    if (!is_prime(d)) return SymbolicH0{"H_0(C_2; Wh_0(C_" + std::to_string(d) + "))"};
    if (data) {
        if (const auto* rec = data->find(d)) return h0_from_record(*rec);
    }
    return SymbolicH0{"H_0(C_2; Cl_" + std::to_string(d) + ")"};
}

inline ClassificationResult classify_actions(std::uint64_t ell, std::uint64_t n,
                                             const ClassGroupDataset* data = nullptr) {
    detail::require_ell(ell);
    if (n < 1) throw PreconditionError("n must be >= 1");
    ClassificationResult result;
    result.ell = ell;
    result.n = n;
    if (n % 2 == 0 || n == 1) return result;

    const std::uint64_t k = (n + 1) / 2;
    result.kind = ClassificationResult::Kind::strata;
    bool used_records = false;
    for (auto d : divisors(ell)) {
        if (d == 1) continue;
        const PartitionQdk part = qdk_partition(d, k);
        const std::uint64_t rank = structure_rank(d);
        const std::uint64_t bound = indeterminacy_bound(d, k);
        const H0Descriptor h0 = h0_descriptor_for(d, data);
        used_records |= std::holds_alternative<H0Result>(h0);
        for (auto q : part.representatives) result.strata.push_back({d, q, rank, h0, bound});
    }
    result.countably_infinite = !result.strata.empty();
    if (used_records) result.assumptions.emplace_back(kRimAssumption);
    for (const auto& s : result.strata) {
        const auto* r = std::get_if<H0Result>(&s.h0_descriptor);
        if (r && r->grh_conditional) {
            result.assumptions.emplace_back("some class-group values assume the Generalized Riemann Hypothesis");
            break;
        }
    }
    return result;
}

/// Sum over 1 < d | ell of |Q_d^k|.
inline std::uint64_t stratum_count(std::uint64_t ell, std::uint64_t k) {
    detail::require_ell(ell);
    if (k <= 1) throw PreconditionError("k must be > 1");
    std::uint64_t total = 0;
    for (auto d : divisors(ell))
        if (d > 1) total += qdk_partition(d, k).size();
    return total;
}

/// Orders attached to hMod(S^1 x L^{2k-1}_{d,q}) = A x| (C_2 x B).
struct HModReport {
    std::uint64_t d = 0;
    std::uint64_t k = 0;
    Integer a_order;                          // 2 d^2
    std::uint64_t b_order = 0;                // |{a : a^e = 1 mod d}|
    std::uint64_t e = 0;                      // gcd(2k, phi(d))
    Integer total_order;                      // 2 d^2 * 2 * |B|
    std::uint64_t effective_quotient_order = 0;  // 4e
    bool discrepancy_flag = false;            // |B| != e, possible for composite d
};

inline HModReport hmod_report(std::uint64_t d, std::uint64_t k) {
    require_odd_square_free(d);
    if (k <= 1) throw PreconditionError("k must be > 1");
    HModReport r;
    r.d = d;
    r.k = k;
    r.a_order = eps_order_bound(d);
    r.e = std::gcd(2 * k, totient(d));
    r.b_order = exponent_subgroup(d, r.e).order;
    r.total_order = r.a_order * 2 * Integer(static_cast<unsigned long>(r.b_order));
    r.effective_quotient_order = 4 * r.e;
    r.discrepancy_flag = r.b_order != r.e;
    return r;
}

/// Parameter space Z^{(d-1)/2} x H_0 of one stratum.
struct HybridStructureDescriptor {
    std::uint64_t d = 0;
    std::uint64_t k = 0;
    FgAbGroup lattice;
    H0Descriptor h0;

    std::string to_string() const { return "(" + lattice.to_string() + ", " + lensclass::to_string(h0) + ")"; }
};

inline HybridStructureDescriptor hybrid_structure_descriptor(std::uint64_t d, std::uint64_t k, H0Descriptor h0) {
    if (k <= 1) throw PreconditionError("k must be > 1");
    return {d, k, FgAbGroup::free(structure_rank(d)), std::move(h0)};
}

/// Wh_0 modulo skew-evens. The stored involution mu is already the negated
/// standard one, so the quotient is A/(1 + mu)A, i.e. the coinvariants of -mu.
inline FgAbGroup si_quotient(const GroupWithInvolution& wh0) {
    const IntMatrix one_plus = IntMatrix::identity(wh0.generators()) + wh0.action();
    FgAbGroup q = cokernel(hconcat(wh0.relations(), one_plus));
    if (q != coinvariants(wh0.negated()))
        throw ConsistencyError("si_quotient disagrees with the coinvariants of the negated involution");
    return q;
}

}  // namespace lensclass

#endif
