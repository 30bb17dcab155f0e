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

#ifndef LENSCLASS_POLYNOMIAL_HPP
#define LENSCLASS_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lensclass/errors.hpp"
#include "lensclass/integer.hpp"

namespace lensclass {

/// Dense univariate polynomial; coefficient i multiplies x^i. Trailing
/// zeros are never stored, so the zero polynomial has no coefficients.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }

    static Polynomial monomial(std::size_t degree, T v = T(1)) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = std::move(v);
        return Polynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<T>& coefficients() const noexcept { return c_; }

    T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const { return c_.back(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= T(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }

    /// Quotient and remainder; the divisor's leading coefficient must divide
    /// every leading term encountered (always true for monic divisors or T a field).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw PreconditionError("polynomial division by zero");
        std::vector<T> rem = a.c_;
        const std::size_t db = b.c_.size() - 1;
        if (rem.size() <= db) return {Polynomial{}, a};
        std::vector<T> quo(rem.size() - db, T(0));
        for (std::size_t i = rem.size(); i-- > db;) {
            if (rem[i] == 0) continue;
            T q = rem[i] / b.c_.back();
            if (q * b.c_.back() != rem[i]) throw ConsistencyError("polynomial division is not exact over this ring");
            quo[i - db] = q;
            for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c_[j];
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    std::string to_string(const char* var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << '(' << c_[i] << ')';
            if (i > 0) os << '*' << var << (i > 1 ? "^" + std::to_string(i) : "");
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

/// Moebius function of n >= 1.
inline int moebius(std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

/// Phi_n(x) = prod_{m | n} (x^m - 1)^{mu(n/m)}.
inline Polynomial<Integer> cyclotomic_polynomial(std::uint64_t n) {
    if (n == 0) throw PreconditionError("cyclotomic_polynomial: n must be positive");
    Polynomial<Integer> num = Polynomial<Integer>::constant(1);
    Polynomial<Integer> den = Polynomial<Integer>::constant(1);
    for (std::uint64_t m = 1; m <= n; ++m) {
        if (n % m) continue;
        const int mu = moebius(n / m);
        if (mu == 0) continue;
        Polynomial<Integer> f = Polynomial<Integer>::monomial(m) - Polynomial<Integer>::constant(1);
        (mu > 0 ? num : den) = (mu > 0 ? num : den) * f;
    }
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw ConsistencyError("cyclotomic_polynomial: inexact Moebius quotient");
    return q;
}

}  // namespace lensclass

#endif
