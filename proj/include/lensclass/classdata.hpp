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

#ifndef LENSCLASS_CLASSDATA_HPP
#define LENSCLASS_CLASSDATA_HPP

// Class groups of Z[zeta_p] ingested from published tables, the deduction of
// H_0(C_2; Cl_p) from the exact sequence
//     2(Cl_p^-) -> Cl_p^+ -> H_0(C_2; Cl_p) -> Cl_p^-/2 -> 0,
// and an analytic minus-class-number oracle used to audit the tables.
//
// Data file format, one record per line, '#' starts a comment:
//     p | Cl_p^+ | Cl_p^-/2 | Cl_p^- | flags
// A group is "0" or a comma-separated list of cyclic orders; Cl_p^- may be
// "-" when unknown. The flag "*" marks values that depend on GRH. Comment
// lines of the form "#@ source: <text>" are collected as citations.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lensclass/abelian.hpp"
#include "lensclass/cyclotomic.hpp"
#include "lensclass/errors.hpp"
#include "lensclass/integer.hpp"
#include "lensclass/modular.hpp"

namespace lensclass {

struct ClassGroupRecord {
    std::uint64_t p = 0;
    FgAbGroup cl_plus;
    FgAbGroup cl_minus_mod2;
    std::optional<FgAbGroup> cl_minus;
    bool grh_conditional = false;
    std::size_t line = 0;
};

/// Throws PreconditionError when a record's invariants fail.
inline void check_record(const ClassGroupRecord& r) {
    if (r.p < 3 || !is_prime(r.p)) throw PreconditionError("p = " + std::to_string(r.p) + " is not an odd prime");
    if (!r.cl_plus.is_finite()) throw PreconditionError("Cl_p^+ must be finite");
    if (!r.cl_minus_mod2.is_elementary_two())
        throw PreconditionError("Cl_p^-/2 must be an elementary abelian 2-group (got " +
                                r.cl_minus_mod2.tuple_notation() + ")");
    if (r.cl_minus) {
        if (!r.cl_minus->is_finite()) throw PreconditionError("Cl_p^- must be finite");
        if (r.cl_minus->mod_two() != r.cl_minus_mod2)
            throw PreconditionError("Cl_p^- = " + r.cl_minus->tuple_notation() + " reduces mod 2 to " +
                                    r.cl_minus->mod_two().tuple_notation() + ", not " +
                                    r.cl_minus_mod2.tuple_notation());
    }
}

struct ClassGroupDataset {
    std::string source;
    std::vector<std::string> citations;
    std::vector<ClassGroupRecord> records;

    const ClassGroupRecord* find(std::uint64_t p) const {
        auto it = std::find_if(records.begin(), records.end(), [p](const auto& r) { return r.p == p; });
        return it == records.end() ? nullptr : &*it;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline Integer parse_integer(const std::string& text, std::size_t line) {
    const std::string t = trim(text);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw DataError("expected a nonnegative integer, got '" + t + "'", line);
    return Integer(t);
}

inline FgAbGroup parse_group(const std::string& text, std::size_t line) {
    const std::string t = trim(text);
    if (t == "0") return {};
    std::vector<Integer> orders;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Integer o = parse_integer(item, line);
        if (o == 0) throw DataError("class groups are finite; cyclic order 0 is not allowed", line);
        orders.push_back(o);
    }
    if (orders.empty()) throw DataError("empty group field", line);
    return FgAbGroup::from_cyclic_orders(orders);
}

}  // namespace detail

inline ClassGroupDataset parse_records(std::istream& in, const std::string& source = "<stream>") {
    ClassGroupDataset data;
    data.source = source;
    std::set<std::uint64_t> seen;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string t = detail::trim(raw);
        if (t.rfind("#@ source:", 0) == 0) {
            data.citations.push_back(detail::trim(t.substr(10)));
            continue;
        }
        const std::string body = detail::trim(t.substr(0, t.find('#')));
        if (body.empty()) continue;

        std::vector<std::string> fields;
        std::stringstream ss(body);
        std::string f;
        while (std::getline(ss, f, '|')) fields.push_back(detail::trim(f));
        if (!body.empty() && body.back() == '|') fields.emplace_back();
        if (fields.size() != 5)
            throw DataError("expected 5 '|'-separated fields, found " + std::to_string(fields.size()), line);

        ClassGroupRecord r;
        r.line = line;
        const Integer p = detail::parse_integer(fields[0], line);
        if (!mpz_fits_ulong_p(p.get_mpz_t())) throw DataError("prime out of range", line);
        r.p = p.get_ui();
        r.cl_plus = detail::parse_group(fields[1], line);
        r.cl_minus_mod2 = detail::parse_group(fields[2], line);
        if (fields[3] != "-") r.cl_minus = detail::parse_group(fields[3], line);
        if (fields[4] == "*") {
            r.grh_conditional = true;
        } else if (!fields[4].empty()) {
            throw DataError("unknown flag '" + fields[4] + "' (expected '*' or nothing)", line);
        }
        try {
            check_record(r);
        } catch (const PreconditionError& e) {
            throw DataError(e.what(), line);
        }
        if (!seen.insert(r.p).second) throw DataError("duplicate record for p = " + std::to_string(r.p), line);
        data.records.push_back(std::move(r));
    }
    return data;
}

inline ClassGroupDataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open class-group data file '" + path + "'");
    return parse_records(in, path);
}

inline std::vector<ClassGroupRecord> load_records(const std::string& path) { return load_dataset(path).records; }

/// H_0(C_2; Cl_p) or, when the exact sequence does not determine it, bounds on its order.
struct H0Result {
    enum class Kind { exact, interval };

    Kind kind = Kind::exact;
    std::optional<FgAbGroup> group;
    Integer order_low = 1;
    Integer order_high = 1;
    bool grh_conditional = false;
    char rule = 'a';  // deduction branch a-d

    bool is_trivial() const { return kind == Kind::exact && group->is_trivial(); }

    std::string to_string() const {
        const std::string star = grh_conditional ? "*" : "";
        if (kind == Kind::exact) return group->tuple_notation() + star;
        return order_low.get_str() + " <= order <= " + order_high.get_str() + star;
    }

    friend bool operator==(const H0Result& a, const H0Result& b) {
        return a.kind == b.kind && a.group == b.group && a.order_low == b.order_low &&
               a.order_high == b.order_high && a.grh_conditional == b.grh_conditional;
    }

    static H0Result exact(FgAbGroup g, bool grh, char rule) {
        H0Result r;
        r.kind = Kind::exact;
        r.order_low = r.order_high = *g.order();
        r.group = std::move(g);
        r.grh_conditional = grh;
        r.rule = rule;
        return r;
    }

    static H0Result interval(Integer low, Integer high, bool grh) {
        H0Result r;
        r.kind = Kind::interval;
        r.order_low = std::move(low);
        r.order_high = std::move(high);
        r.grh_conditional = grh;
        r.rule = 'd';
        return r;
    }
};

/// Deduction rules:
///   (a) Cl^+ = 0            -> H_0 = Cl^-/2
///   (b) Cl^-/2 = 0          -> H_0 = Cl^+ (Cl^- has odd order, so 2(Cl^-) = 0)
///   (c) |Cl^+| odd          -> H_0 = Cl^+ + Cl^-/2 (the 2-group maps trivially, the odd part splits)
///   (d) otherwise           -> |Cl^-/2| <= |H_0| <= |Cl^+| |Cl^-/2|
inline H0Result h0_from_record(const ClassGroupRecord& r) {
    check_record(r);
    const bool grh = r.grh_conditional;
    if (r.cl_plus.is_trivial()) return H0Result::exact(r.cl_minus_mod2, grh, 'a');
    if (r.cl_minus_mod2.is_trivial()) return H0Result::exact(r.cl_plus, grh, 'b');
    const Integer plus = *r.cl_plus.order();
    const Integer minus2 = *r.cl_minus_mod2.order();
    if (plus % 2 != 0) return H0Result::exact(r.cl_plus.direct_sum(r.cl_minus_mod2), grh, 'c');
    return H0Result::interval(minus2, plus * minus2, grh);
}

/// Primes up to this bound are covered by the reference table.
inline constexpr std::uint64_t kTable1Bound = 241;

struct Table1Reference {
    std::uint64_t p;
    H0Result h0;
};

/// The published nonvanishing rows for p <= 241.
inline std::vector<Table1Reference> table1_reference() {
    const auto e222 = FgAbGroup(0, {2, 2, 2});
    return {
        {29, H0Result::exact(e222, false, 'a')},
        {113, H0Result::exact(e222, false, 'a')},
        {163, H0Result::interval(4, 16, true)},
        {191, H0Result::exact(FgAbGroup(0, {11}), true, 'b')},
        {197, H0Result::exact(e222, true, 'a')},
        {229, H0Result::exact(FgAbGroup(0, {3}), true, 'b')},
        {239, H0Result::exact(e222, true, 'a')},
    };
}

struct Table1Row {
    ClassGroupRecord record;
    H0Result h0;
};

struct Table1Report {
    std::vector<Table1Row> rows;           // primes with H_0 not known to vanish
    std::vector<std::uint64_t> vanishing;  // primes with H_0 = 0, including p = 2
    std::vector<std::uint64_t> gaps;       // odd primes <= 241 without a record
    std::vector<std::string> mismatches;   // filled when cross-checking
    bool cross_checked = false;
    bool any_conditional_vanishing = false;

    bool matches() const { return gaps.empty() && mismatches.empty(); }
};

/// Computes H_0 for every prime <= 241. p = 2 always vanishes since Z[zeta_2] = Z.
inline Table1Report reproduce_table1(const std::vector<ClassGroupRecord>& records, bool cross_check = true) {
    std::map<std::uint64_t, const ClassGroupRecord*> by_prime;
    for (const auto& r : records) by_prime[r.p] = &r;

    Table1Report report;
    report.cross_checked = cross_check;
    report.vanishing.push_back(2);
    for (std::uint64_t p = 3; p <= kTable1Bound; p += 2) {
        if (!is_prime(p)) continue;
        auto it = by_prime.find(p);
        if (it == by_prime.end()) {
            report.gaps.push_back(p);
            continue;
        }
        H0Result h0 = h0_from_record(*it->second);
        if (h0.is_trivial()) {
            report.vanishing.push_back(p);
            report.any_conditional_vanishing |= h0.grh_conditional;
        } else {
            report.rows.push_back({*it->second, std::move(h0)});
        }
    }
    if (!cross_check) return report;

    const std::set<std::uint64_t> gap_set(report.gaps.begin(), report.gaps.end());
    std::map<std::uint64_t, const H0Result*> computed;
    for (const auto& row : report.rows) computed[row.record.p] = &row.h0;
    for (const auto& ref : table1_reference()) {
        if (gap_set.count(ref.p)) continue;
        auto it = computed.find(ref.p);
        if (it == computed.end()) {
            report.mismatches.push_back("p = " + std::to_string(ref.p) + ": expected " + ref.h0.to_string() +
                                        ", computed 0");
        } else if (!(*it->second == ref.h0)) {
            report.mismatches.push_back("p = " + std::to_string(ref.p) + ": expected " + ref.h0.to_string() +
                                        ", computed " + it->second->to_string());
        }
        computed.erase(ref.p);
    }
    for (const auto& [p, h0] : computed)
        report.mismatches.push_back("p = " + std::to_string(p) + ": expected 0, computed " + h0->to_string());
    return report;
}

/// Primes accepted by the analytic oracle.
inline constexpr std::uint64_t kMinusClassNumberBound = 300;

/// Smallest primitive root modulo a prime p.
inline std::uint64_t primitive_root(std::uint64_t p) {
    const std::uint64_t n = p - 1;
    const auto factors = prime_factors(n);
    for (std::uint64_t g = 2; g < p; ++g) {
        if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t f) { return pow_mod(g, n / f, p) != 1; }))
            return g;
    }
    return 1;  // p = 2
}

/// h_p^- = 2p prod_{chi odd} (-B_{1,chi}/2), B_{1,chi} = (1/p) sum_a a chi(a).
///
/// With a primitive root g and chi_j(g^t) = w^{j t}, w = exp(2 pi i/(p-1)),
/// p B_{1,chi_j} = F(w^j) for F(x) = sum_t (g^t mod p) x^t; chi_j is odd iff j is odd.
/// The product of the F(w^j) is evaluated exactly in Z[zeta_{p-1}].
inline Integer minus_class_number(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw PreconditionError("minus_class_number: p must be an odd prime");
    if (p > kMinusClassNumberBound)
        throw PreconditionError("minus_class_number: p exceeds the supported bound " +
                                std::to_string(kMinusClassNumberBound));
    const std::uint64_t n = p - 1;
    const std::uint64_t g = primitive_root(p);
    std::vector<std::uint64_t> powers(n);
    for (std::uint64_t t = 0, x = 1; t < n; ++t, x = x * g % p) powers[t] = x;

    const auto ring = std::make_shared<const CyclotomicRing<Integer>>(n);
    CyclotomicInteger product = CyclotomicInteger::constant(ring, Integer(1));
    for (std::uint64_t j = 1; j < n; j += 2) {
        std::vector<Integer> c(n, 0);
        for (std::uint64_t t = 0; t < n; ++t) c[(j * t) % n] += static_cast<unsigned long>(powers[t]);
        product *= CyclotomicInteger(ring, Polynomial<Integer>(std::move(c)));
    }
    if (!product.is_constant())
        throw ConsistencyError("minus_class_number: Bernoulli product is not rational for p = " + std::to_string(p));

    const std::uint64_t m = n / 2;
    Rational h(product.constant_term());
    const Integer two_p(static_cast<unsigned long>(2 * p));
    Integer denom = 1;
    for (std::uint64_t i = 0; i < m; ++i) denom *= two_p;
    h *= Rational(two_p, denom);
    if (m % 2 == 1) h = -h;
    h.canonicalize();
    if (h.get_den() != 1 || h <= 0)
        throw ConsistencyError("minus_class_number: non-integral or nonpositive result " + h.get_str() +
                               " for p = " + std::to_string(p));
    return h.get_num();
}

struct ValidationIssue {
    std::uint64_t p;
    std::string message;
};

struct ValidationEntry {
    std::uint64_t p;
    std::optional<Integer> h_minus;  // absent above the oracle bound
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
};

/// Audits each record against the analytic class number:
/// |Cl_p^-| = h_p^- when the full group is recorded; |Cl_p^-/2| divides the
/// 2-part of h_p^-, and Cl_p^-/2 vanishes exactly when h_p^- is odd.
inline ValidationReport validate_records(const std::vector<ClassGroupRecord>& records) {
    ValidationReport report;
    for (const auto& r : records) {
        if (r.p > kMinusClassNumberBound) {
            report.entries.push_back({r.p, std::nullopt});
            continue;
        }
        const Integer h = minus_class_number(r.p);
        report.entries.push_back({r.p, h});
        if (r.cl_minus && *r.cl_minus->order() != h)
            report.issues.push_back({r.p, "|Cl_p^-| = " + r.cl_minus->order()->get_str() +
                                              " but the analytic class number is " + h.get_str()});
        const Integer mod2 = *r.cl_minus_mod2.order();
        if (!divides(mod2, two_part(h)))
            report.issues.push_back({r.p, "|Cl_p^-/2| = " + mod2.get_str() + " does not divide the 2-part " +
                                              two_part(h).get_str() + " of h_p^- = " + h.get_str()});
        if (r.cl_minus_mod2.is_trivial() != (h % 2 != 0))
            report.issues.push_back({r.p, "Cl_p^-/2 = " + r.cl_minus_mod2.tuple_notation() +
                                              " is inconsistent with the parity of h_p^- = " + h.get_str()});
    }
    return report;
}

}  // namespace lensclass

#endif
