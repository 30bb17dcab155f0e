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

#ifndef LENSCLASS_INTEGER_HPP
#define LENSCLASS_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace lensclass {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs(const Integer& a) { return ::abs(a); }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool divides(const Integer& a, const Integer& b) {
    if (a == 0) return b == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

inline std::optional<std::int64_t> to_int64(const Integer& a) {
    if (!mpz_fits_slong_p(a.get_mpz_t())) return std::nullopt;
    return static_cast<std::int64_t>(a.get_si());
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

/// Largest power of two dividing a nonzero integer.
inline Integer two_part(const Integer& a) {
    if (a == 0) return 0;
    return Integer(1) << static_cast<unsigned long>(mpz_scan1(a.get_mpz_t(), 0));
}

}  // namespace lensclass

#endif
