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

#ifndef LENSCLASS_LENS_HPP
#define LENSCLASS_LENS_HPP

// Lens spaces L(d; q_1, ..., q_k) of dimension 2k - 1 and their invariants:
// Postnikov class, linking form, homotopy and homeomorphism tests, the exact
// rho-multisignature, and the rank and order formulas for structure sets.
//
// rho is stored as the raw product
//     rho(j) = prod_i (zeta^{j q_i} + 1) / (zeta^{j q_i} - 1),   zeta = e^{2 pi i / d},
// with no global normalization. Only differences and zero tests of rho are
// meaningful, so a constant factor would cancel anyway.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lensclass/abelian.hpp"
#include "lensclass/cyclotomic.hpp"
#include "lensclass/errors.hpp"
#include "lensclass/integer.hpp"
#include "lensclass/modular.hpp"

namespace lensclass {

/// Permutation brute force in homeomorphism tests is limited to this many rotations.
inline constexpr std::size_t kMaxHomeomorphismRotations = 8;

class LensSpace {
public:
    LensSpace(std::uint64_t d, const std::vector<std::int64_t>& rotations) : d_(d) {
        require_odd_square_free(d);
        if (rotations.empty()) throw PreconditionError("a lens space needs at least one rotation number");
        for (auto q : rotations) {
            const std::uint64_t r = residue(q, d);
            if (std::gcd(r, d) != 1)
                throw PreconditionError("rotation number " + std::to_string(q) + " is not a unit modulo " +
                                        std::to_string(d));
            rotations_.push_back(r);
        }
    }

    std::uint64_t d() const noexcept { return d_; }
    const std::vector<std::uint64_t>& rotations() const noexcept { return rotations_; }
    std::uint64_t k() const noexcept { return rotations_.size(); }
    std::uint64_t dimension() const noexcept { return 2 * k() - 1; }

    std::string to_string() const {
        std::string s = "L(" + std::to_string(d_) + ";";
        for (std::size_t i = 0; i < rotations_.size(); ++i) s += (i ? "," : "") + std::to_string(rotations_[i]);
        return s + ")";
    }

    friend bool operator==(const LensSpace&, const LensSpace&) = default;

private:
    std::uint64_t d_;
    std::vector<std::uint64_t> rotations_;
};

/// q_1 * ... * q_k mod d.
inline std::uint64_t postnikov_invariant(const LensSpace& l) {
    std::uint64_t q = 1;
    for (auto r : l.rotations()) q = mul_mod(q, r, l.d());
    return q;
}

/// q/d in Q/Z, returned in [0, 1). The dimension parameter k does not enter.
inline Rational linking_form(std::uint64_t d, std::int64_t q, std::uint64_t /*k*/) {
    if (d == 0) throw PreconditionError("linking_form: d must be positive");
    const std::uint64_t r = residue(q, d);
    if (std::gcd(r, d) != 1) throw PreconditionError("linking_form: q must be coprime to d");
    Rational v(static_cast<unsigned long>(r), static_cast<unsigned long>(d));
    v.canonicalize();
    return v;
}

namespace detail {
inline void require_comparable(const LensSpace& a, const LensSpace& b) {
    if (a.d() != b.d() || a.k() != b.k())
        throw PreconditionError("incomparable lens spaces " + a.to_string() + " and " + b.to_string() +
                                ": d and k must agree");
}
}  // namespace detail

/// Same class of the Postnikov invariant in Q_d^k.
inline bool homotopy_equivalent(const LensSpace& a, const LensSpace& b) {
    detail::require_comparable(a, b);
    const auto qa = static_cast<std::int64_t>(postnikov_invariant(a));
    const auto qb = static_cast<std::int64_t>(postnikov_invariant(b));
    return qdk_class_of(a.d(), a.k(), qa) == qdk_class_of(b.d(), b.k(), qb);
}

/// q'_i = signs[i] * unit * q_{permutation[i]} (mod d) for all i.
struct HomeomorphismWitness {
    std::uint64_t unit = 1;
    std::vector<std::size_t> permutation;
    std::vector<int> signs;

    int orientation() const {
        int s = 1;
        for (int e : signs) s *= e;
        return s;
    }
};

/// Exhaustive search over units, permutations and signs.
inline std::optional<HomeomorphismWitness> homeomorphism_witness(const LensSpace& a, const LensSpace& b) {
    detail::require_comparable(a, b);
    const std::size_t k = a.k();
    if (k > kMaxHomeomorphismRotations)
        throw PreconditionError("homeomorphism search is limited to k <= " +
                                std::to_string(kMaxHomeomorphismRotations));
    const std::uint64_t d = a.d();
    const auto& qa = a.rotations();
    const auto& qb = b.rotations();
    for (auto u : unit_group(d).units) {
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                bool ok = true;
                for (std::size_t i = 0; i < k && ok; ++i) {
                    std::uint64_t image = mul_mod(u, qa[perm[i]], d);
                    if (mask >> i & 1u) image = (d - image) % d;
                    ok = image == qb[i];
                }
                if (!ok) continue;
                HomeomorphismWitness w;
                w.unit = u;
                w.permutation = perm;
                for (std::size_t i = 0; i < k; ++i) w.signs.push_back(mask >> i & 1u ? -1 : 1);
                return w;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

inline bool homeomorphic(const LensSpace& a, const LensSpace& b) { return homeomorphism_witness(a, b).has_value(); }

/// rho components indexed by j = 1, ..., d-1.
class RhoVector {
public:
    RhoVector(std::uint64_t d, std::vector<CyclotomicNumber> values) : d_(d), values_(std::move(values)) {
        if (values_.size() + 1 != d_) throw PreconditionError("RhoVector: need d-1 components");
    }

    std::uint64_t d() const noexcept { return d_; }
    const std::vector<CyclotomicNumber>& values() const noexcept { return values_; }

    const CyclotomicNumber& at(std::uint64_t j) const {
        if (j < 1 || j >= d_) throw PreconditionError("RhoVector: index out of range");
        return values_[j - 1];
    }

    bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.is_zero(); });
    }

    /// value(d - j) == conjugate(value(j)) for every j.
    bool conjugation_symmetric() const {
        for (std::uint64_t j = 1; j < d_; ++j)
            if (!(at(d_ - j) == at(j).conjugate())) return false;
        return true;
    }

    /// j -> value(a j mod d) for a unit a.
    RhoVector reindexed(std::uint64_t a) const {
        if (std::gcd(a % d_, d_) != 1) throw PreconditionError("reindexing factor must be a unit");
        std::vector<CyclotomicNumber> out;
        out.reserve(values_.size());
        for (std::uint64_t j = 1; j < d_; ++j) out.push_back(at(mul_mod(a % d_, j, d_)));
        return {d_, std::move(out)};
    }

    RhoVector scaled(int sign) const {
        std::vector<CyclotomicNumber> out;
        for (const auto& v : values_) out.push_back(v * Rational(sign));
        return {d_, std::move(out)};
    }

    friend RhoVector operator-(const RhoVector& a, const RhoVector& b) {
        if (a.d_ != b.d_) throw PreconditionError("RhoVector: conductor mismatch");
        std::vector<CyclotomicNumber> out;
        for (std::size_t i = 0; i < a.values_.size(); ++i) out.push_back(a.values_[i] - b.values_[i]);
        return {a.d_, std::move(out)};
    }

    friend bool operator==(const RhoVector& a, const RhoVector& b) { return a.d_ == b.d_ && a.values_ == b.values_; }

private:
    std::uint64_t d_;
    std::vector<CyclotomicNumber> values_;
};

inline RhoVector rho_invariant(const LensSpace& l) {
    const std::uint64_t d = l.d();
    const auto field = std::make_shared<const CyclotomicField>(d);
    const auto one = CyclotomicNumber::constant(field, Rational(1));
    // (zeta^a + 1) / (zeta^a - 1) for every nonzero residue a.
    std::vector<CyclotomicNumber> factor;
    factor.reserve(d);
    factor.push_back(one);
    for (std::uint64_t a = 1; a < d; ++a) {
        const auto z = CyclotomicNumber::zeta_power(field, static_cast<std::int64_t>(a));
        factor.push_back((z + one) / (z - one));
    }
    std::vector<CyclotomicNumber> values;
    values.reserve(d - 1);
    for (std::uint64_t j = 1; j < d; ++j) {
        CyclotomicNumber v = one;
        for (auto q : l.rotations()) v *= factor[mul_mod(j, q, d)];
        values.push_back(std::move(v));
    }
    return {d, std::move(values)};
}

struct RhoDifference {
    RhoVector difference;
    bool is_zero;
};

/// Raw componentwise rho(a) - rho(b); no reindexing is applied.
inline RhoDifference rho_difference(const LensSpace& a, const LensSpace& b) {
    if (a.d() != b.d()) throw PreconditionError("rho_difference: d must agree");
    RhoVector diff = rho_invariant(a) - rho_invariant(b);
    const bool zero = diff.is_zero();
    return {std::move(diff), zero};
}

/// rho(a) - orientation * rho(b)(j u^{-1}) for the witness b = signs * u * sigma(a).
inline RhoDifference normalized_rho_difference(const LensSpace& a, const LensSpace& b,
                                               const HomeomorphismWitness& w) {
    detail::require_comparable(a, b);
    const std::uint64_t d = a.d();
    const std::uint64_t u_inv = pow_mod(w.unit, totient(d) - 1, d);
    RhoVector diff = rho_invariant(a) - rho_invariant(b).reindexed(u_inv).scaled(w.orientation());
    const bool zero = diff.is_zero();
    return {std::move(diff), zero};
}

/// Rank (p - 3)/2 of Wh_1(C_p), p an odd prime.
inline std::uint64_t wh1_rank_prime(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw PreconditionError("wh1_rank_prime: p must be an odd prime (got " + std::to_string(p) + ")");
    return (p - 3) / 2;
}

/// (d - 1)/2, the rank of the h-structure set of S^1 x L^{2k-1}_{d,q}.
inline std::uint64_t structure_rank(std::uint64_t d) {
    require_odd_square_free(d);
    return (d - 1) / 2;
}

/// Atiyah-Hirzebruch E^2 page H_i(L^{2k-1}; L<1>_j) restricted to total degree <= 2k:
///   Z    if i = 2k-1 and 4 | j > 0,
///   Z/d  if 0 < i < 2k-1 is odd and 4 | j > 0,
///   0    otherwise.
/// The product of the orders on the line i + j = 2k - 1 bounds |H_{2k-1}(L; L<1>)|.
struct E2Page {
    std::uint64_t d = 0;
    std::uint64_t k = 0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, FgAbGroup> cells;  // nonzero cells only
    Integer h_order_bound = 1;

    FgAbGroup at(std::uint64_t i, std::uint64_t j) const {
        auto it = cells.find({i, j});
        return it == cells.end() ? FgAbGroup{} : it->second;
    }
};

inline E2Page ahss_e2_page(std::uint64_t d, std::uint64_t k) {
    require_odd_square_free(d);
    if (k <= 1) throw PreconditionError("ahss_e2_page: k must be > 1");
    E2Page page;
    page.d = d;
    page.k = k;
    const std::uint64_t top = 2 * k - 1;
    for (std::uint64_t i = 0; i <= top; ++i)
        for (std::uint64_t j = 4; i + j <= 2 * k; j += 4) {
            if (i == top) {
                page.cells[{i, j}] = FgAbGroup::free(1);
            } else if (i > 0 && i % 2 == 1) {
                page.cells[{i, j}] = FgAbGroup(0, {Integer(static_cast<unsigned long>(d))});
            }
        }
    for (const auto& [ij, g] : page.cells) {
        if (ij.first + ij.second != top) continue;
        const auto o = g.order();
        if (!o) throw ConsistencyError("ahss_e2_page: infinite cell on the bounding line");
        page.h_order_bound *= *o;
    }
    return page;
}

/// 2 d^2: the Dehn-twist homeomorphism has this power homotopic to the identity.
inline Integer eps_order_bound(std::uint64_t d) {
    if (d <= 1 || d % 2 == 0) throw PreconditionError("eps_order_bound: d must be odd and > 1");
    const Integer dd(static_cast<unsigned long>(d));
    return 2 * dd * dd;
}

}  // namespace lensclass

#endif
