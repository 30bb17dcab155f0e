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

#ifndef LENSCLASS_CYCLOTOMIC_HPP
#define LENSCLASS_CYCLOTOMIC_HPP

// Exact arithmetic in Z[zeta_n] and Q(zeta_n), represented as polynomials
// of degree < phi(n) reduced modulo the n-th cyclotomic polynomial. The
// representation is canonical, so equality and zero tests are exact.

#include <cstdint>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lensclass/errors.hpp"
#include "lensclass/integer.hpp"
#include "lensclass/polynomial.hpp"

namespace lensclass {

template <class T>
class CyclotomicElement;

/// Shared modulus data for one conductor.
template <class T>
class CyclotomicRing {
public:
    explicit CyclotomicRing(std::uint64_t conductor) : n_(conductor) {
        if (conductor == 0) throw PreconditionError("conductor must be positive");
        const Polynomial<Integer> phi = cyclotomic_polynomial(conductor);
        std::vector<T> c;
        for (const auto& v : phi.coefficients()) c.emplace_back(v);
        modulus_ = Polynomial<T>(std::move(c));
    }

    std::uint64_t conductor() const noexcept { return n_; }
    std::size_t degree() const noexcept { return static_cast<std::size_t>(modulus_.degree()); }
    const Polynomial<T>& modulus() const noexcept { return modulus_; }

    /// Reduction modulo the (monic) cyclotomic polynomial.
    Polynomial<T> reduce(Polynomial<T> p) const {
        if (p.degree() < modulus_.degree()) return p;
        std::vector<T> c = p.coefficients();
        const std::size_t dm = degree();
        const auto& m = modulus_.coefficients();
        for (std::size_t i = c.size(); i-- > dm;) {
            if (c[i] == 0) continue;
            const T lead = c[i];
            for (std::size_t j = 0; j <= dm; ++j) c[i - dm + j] -= lead * m[j];
        }
        c.resize(dm);
        return Polynomial<T>(std::move(c));
    }

private:
    std::uint64_t n_;
    Polynomial<T> modulus_;
};

template <class T>
class CyclotomicElement {
public:
    using Ring = CyclotomicRing<T>;

    explicit CyclotomicElement(std::shared_ptr<const Ring> ring) : ring_(std::move(ring)) {}
    CyclotomicElement(std::shared_ptr<const Ring> ring, Polynomial<T> value)
        : ring_(std::move(ring)), value_(ring_->reduce(std::move(value))) {}

    static CyclotomicElement constant(std::shared_ptr<const Ring> ring, T v) {
        return CyclotomicElement(std::move(ring), Polynomial<T>::constant(std::move(v)));
    }

    /// zeta_n^e for any integer e.
    static CyclotomicElement zeta_power(std::shared_ptr<const Ring> ring, std::int64_t e) {
        const auto n = static_cast<std::int64_t>(ring->conductor());
        const auto r = static_cast<std::size_t>(((e % n) + n) % n);
        return CyclotomicElement(std::move(ring), Polynomial<T>::monomial(r));
    }

    std::uint64_t conductor() const noexcept { return ring_->conductor(); }
    const Polynomial<T>& value() const noexcept { return value_; }
    const std::shared_ptr<const Ring>& ring() const noexcept { return ring_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    /// Degree <= 0 in the canonical basis, i.e. a rational (or integer) number.
    bool is_constant() const noexcept { return value_.degree() <= 0; }
    T constant_term() const { return value_.coefficient(0); }

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
        return a.conductor() == b.conductor() && a.value_ == b.value_;
    }

    friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
        check(a, b);
        return {a.ring_, a.value_ + b.value_};
    }
    friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
        check(a, b);
        return {a.ring_, a.value_ - b.value_};
    }
    friend CyclotomicElement operator-(const CyclotomicElement& a) { return {a.ring_, -a.value_}; }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
        check(a, b);
        return {a.ring_, a.value_ * b.value_};
    }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const T& s) { return {a.ring_, a.value_ * s}; }

    CyclotomicElement& operator*=(const CyclotomicElement& b) { return *this = *this * b; }
    CyclotomicElement& operator+=(const CyclotomicElement& b) { return *this = *this + b; }

    /// The Galois automorphism zeta -> zeta^u (u coprime to the conductor).
    CyclotomicElement galois(std::int64_t u) const {
        const auto n = static_cast<std::int64_t>(conductor());
        const auto& c = value_.coefficients();
        std::vector<T> out(static_cast<std::size_t>(n), T(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto e = static_cast<std::size_t>((((static_cast<std::int64_t>(i) * u) % n) + n) % n);
            out[e] += c[i];
        }
        return {ring_, Polynomial<T>(std::move(out))};
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    CyclotomicElement conjugate() const { return galois(-1); }

    /// Multiplicative inverse; only over a field of coefficients.
    CyclotomicElement inverse() const
        requires std::is_same_v<T, Rational>
    {
        if (is_zero()) throw PreconditionError("division by zero in cyclotomic field");
        // Extended Euclid: s * value + t * modulus = g, g a nonzero constant.
        Polynomial<T> r0 = ring_->modulus(), r1 = value_;
        Polynomial<T> s0, s1 = Polynomial<T>::constant(T(1));
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            Polynomial<T> s = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r0.degree() != 0) throw ConsistencyError("cyclotomic inverse: value shares a factor with the modulus");
        T g = r0.coefficient(0);
        return {ring_, s0 * (T(1) / g)};
    }

    friend CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b)
        requires std::is_same_v<T, Rational>
    {
        check(a, b);
        return a * b.inverse();
    }

    std::string to_string() const { return value_.to_string("z"); }

private:
    static void check(const CyclotomicElement& a, const CyclotomicElement& b) {
        if (a.conductor() != b.conductor()) throw PreconditionError("cyclotomic conductor mismatch");
    }

    std::shared_ptr<const Ring> ring_;
    Polynomial<T> value_;
};

using CyclotomicField = CyclotomicRing<Rational>;
using CyclotomicNumber = CyclotomicElement<Rational>;
using CyclotomicInteger = CyclotomicElement<Integer>;

}  // namespace lensclass

#endif
