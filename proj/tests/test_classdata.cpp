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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "lensclass/classdata.hpp"
#include "oracles.hpp"

namespace lensclass {
namespace {

ClassGroupDataset parse(const std::string& text) {
    std::istringstream in(text);
    return parse_records(in, "<test>");
}

std::size_t error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const DataError& e) {
        return e.line();
    }
    return 0;
}

FgAbGroup grp(std::initializer_list<long> orders) {
    std::vector<Integer> o(orders.begin(), orders.end());
    return FgAbGroup::from_cyclic_orders(o);
}

ClassGroupRecord record(std::uint64_t p, FgAbGroup plus, FgAbGroup mod2, bool grh = false) {
    ClassGroupRecord r;
    r.p = p;
    r.cl_plus = std::move(plus);
    r.cl_minus_mod2 = std::move(mod2);
    r.grh_conditional = grh;
    return r;
}

const ClassGroupDataset& bundled() {
    static const ClassGroupDataset data = load_dataset(LENSCLASS_DEFAULT_DATA);
    return data;
}

TEST(Parsing, LoadsRecords) {
    const auto data = parse("#@ source: somewhere\n# comment\n\n29 | 0 | 2,2,2 | 2,2,2 |\n191 | 11 | 0 | - | *  # note\n");
    ASSERT_EQ(data.records.size(), 2u);
    EXPECT_EQ(data.citations, (std::vector<std::string>{"somewhere"}));
    const auto& r = data.records[0];
    EXPECT_EQ(r.p, 29u);
    EXPECT_TRUE(r.cl_plus.is_trivial());
    EXPECT_EQ(r.cl_minus_mod2, grp({2, 2, 2}));
    EXPECT_EQ(r.line, 4u);
    EXPECT_FALSE(r.grh_conditional);
    EXPECT_TRUE(data.records[1].grh_conditional);
    EXPECT_FALSE(data.records[1].cl_minus.has_value());
    EXPECT_EQ(data.find(191), &data.records[1]);
    EXPECT_EQ(data.find(7), nullptr);
}

TEST(Parsing, EmptyInput) { EXPECT_TRUE(parse("").records.empty()); }

TEST(Parsing, ReportsLineOfEachError) {
    EXPECT_EQ(error_line("3 | 0 | 0 | 0 |\n5 | 0 | 4 | - |\n"), 2u);            // mod-2 part not elementary
    EXPECT_EQ(error_line("3 | 0 | 0 | 0 |\n3 | 0 | 0 | 0 |\n"), 2u);            // duplicate prime
    EXPECT_EQ(error_line("3 | 0 | 0 |\n"), 1u);                                 // field count
    EXPECT_EQ(error_line("\n\n3 | x | 0 | 0 |\n"), 3u);                         // not an integer
    EXPECT_EQ(error_line("3 | 0 | 0 | 0 | ?\n"), 1u);                           // unknown flag
    EXPECT_EQ(error_line("9 | 0 | 0 | 0 |\n"), 1u);                             // not prime
    EXPECT_EQ(error_line("29 | 0 | 2,2,2 | 2,2 |\n"), 1u);                      // Cl^- disagrees with Cl^-/2
    EXPECT_EQ(error_line("3 | 0 | 0 | 0 |\n7 | 0 | 0 | 0 |\n11 | 0 | 0 | 0 |"), 0u);
    EXPECT_EQ(error_line("3 | 0 | 0 | 0 |\n7 | 0 | 0 | 0 |\n11 | 5,0 | 0 | 0 |"), 3u);  // infinite group
}

TEST(Parsing, MissingFile) { EXPECT_THROW(load_dataset("/nonexistent/class_groups.txt"), DataError); }

TEST(Parsing, BundledData) {
    const auto& data = bundled();
    EXPECT_EQ(data.records.size(), 52u);
    EXPECT_EQ(data.citations.size(), 3u);
    for (const auto& r : data.records) EXPECT_EQ(r.grh_conditional, r.p >= 157) << r.p;
}

TEST(H0FromRecord, TableExamples) {
    const auto h29 = h0_from_record(record(29, grp({}), grp({2, 2, 2})));
    EXPECT_EQ(h29.kind, H0Result::Kind::exact);
    EXPECT_EQ(*h29.group, grp({2, 2, 2}));
    EXPECT_EQ(h29.rule, 'a');

    const auto h191 = h0_from_record(record(191, grp({11}), grp({}), true));
    EXPECT_EQ(*h191.group, grp({11}));
    EXPECT_TRUE(h191.grh_conditional);
    EXPECT_EQ(h191.rule, 'b');
    EXPECT_EQ(h191.to_string(), "(11)*");

    const auto h163 = h0_from_record(record(163, grp({2, 2}), grp({2, 2}), true));
    EXPECT_EQ(h163.kind, H0Result::Kind::interval);
    EXPECT_EQ(h163.order_low, 4);
    EXPECT_EQ(h163.order_high, 16);
    EXPECT_FALSE(h163.group.has_value());
    EXPECT_EQ(h163.to_string(), "4 <= order <= 16*");
}

TEST(H0FromRecord, OddPlusPartSplits) {
    const auto h = h0_from_record(record(29, grp({3}), grp({2, 2, 2})));
    EXPECT_EQ(h.rule, 'c');
    EXPECT_EQ(*h.group, grp({2, 2, 6}));
}

TEST(H0FromRecord, OrderBoundsAndGrhPropagation) {
    const std::vector<FgAbGroup> plus = {grp({}), grp({3}), grp({2}), grp({2, 2}), grp({5, 4})};
    const std::vector<FgAbGroup> mod2 = {grp({}), grp({2}), grp({2, 2, 2})};
    for (const auto& a : plus)
        for (const auto& b : mod2)
            for (bool grh : {false, true}) {
                const auto h = h0_from_record(record(101, a, b, grh));
                EXPECT_EQ(h.grh_conditional, grh);
                EXPECT_LE(h.order_low, h.order_high);
                EXPECT_GE(h.order_low, *b.order());
                EXPECT_LE(h.order_high, *a.order() * *b.order());
                if (h.kind == H0Result::Kind::exact) { EXPECT_EQ(*h.group->order(), h.order_low); }
            }
}

// For a finite C_2-module A put A+ = (1 + i)A and A- = A/A+. The sequence
// 2(A-) -> A+ -> H_0(C_2; A) -> A-/2 -> 0 is exact, so the deduction rules
// applied to (A+, A-/2) must agree with H_0 computed directly.
TEST(H0FromRecord, AgreesWithExplicitModules) {
    std::mt19937_64 rng(1729);
    std::size_t exact_cases = 0;
    for (int t = 0; t < 500; ++t) {
        const auto inv = oracle::random_involution(rng, 200, t % 2 == 0);
        const GroupWithInvolution a(inv.relations, inv.action);
        const IntMatrix norm = IntMatrix::identity(a.generators()) + a.action();
        const FgAbGroup plus = lattice::subquotient(a.image_lattice(norm), a.relations());
        const FgAbGroup minus = cokernel(hconcat(a.relations(), norm));
        ClassGroupRecord r = record(3, plus, minus.mod_two(), t % 5 == 0);
        r.cl_minus = minus;
        const H0Result h = h0_from_record(r);
        const FgAbGroup direct = coinvariants(a);
        EXPECT_EQ(h.grh_conditional, t % 5 == 0);
        EXPECT_GE(*direct.order(), h.order_low);
        EXPECT_LE(*direct.order(), h.order_high);
        if (h.kind == H0Result::Kind::exact) {
            ++exact_cases;
            EXPECT_EQ(*h.group, direct) << inv.relations.to_string() << " / " << inv.action.to_string();
        }
    }
    EXPECT_GT(exact_cases, 100u);
}

TEST(Table1, BundledDataMatches) {
    const auto report = reproduce_table1(bundled().records);
    EXPECT_TRUE(report.matches());
    EXPECT_TRUE(report.gaps.empty());
    ASSERT_EQ(report.rows.size(), 7u);
    EXPECT_EQ(report.vanishing.size(), 46u);
    EXPECT_EQ(report.vanishing.front(), 2u);
    const auto ref = table1_reference();
    for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_EQ(report.rows[i].record.p, ref[i].p);
        EXPECT_EQ(report.rows[i].h0, ref[i].h0);
    }
}

TEST(Table1, MissingPrimeIsAGap) {
    auto records = bundled().records;
    std::erase_if(records, [](const auto& r) { return r.p == 113; });
    const auto report = reproduce_table1(records);
    EXPECT_EQ(report.gaps, (std::vector<std::uint64_t>{113}));
    EXPECT_TRUE(report.mismatches.empty());
    EXPECT_FALSE(report.matches());
}

TEST(Table1, CorruptedRowIsAMismatch) {
    auto records = bundled().records;
    for (auto& r : records)
        if (r.p == 29) r.cl_plus = grp({3});
    const auto report = reproduce_table1(records);
    ASSERT_EQ(report.mismatches.size(), 1u);
    EXPECT_NE(report.mismatches[0].find("p = 29"), std::string::npos);
    EXPECT_TRUE(reproduce_table1(records, false).mismatches.empty());
}

TEST(Table1, UnexpectedNonvanishingIsAMismatch) {
    auto records = bundled().records;
    for (auto& r : records)
        if (r.p == 101) r.cl_plus = grp({5});
    EXPECT_EQ(reproduce_table1(records).mismatches.size(), 1u);
}

TEST(MinusClassNumber, SmallPrimes) {
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) EXPECT_EQ(minus_class_number(p), 1) << p;
    EXPECT_EQ(minus_class_number(23), 3);
    EXPECT_EQ(minus_class_number(29), 8);
    EXPECT_EQ(minus_class_number(31), 9);
    EXPECT_EQ(minus_class_number(37), 37);
    EXPECT_EQ(minus_class_number(41), 121);
    EXPECT_EQ(minus_class_number(43), 211);
    EXPECT_THROW(minus_class_number(15), PreconditionError);
    EXPECT_THROW(minus_class_number(307), PreconditionError);
}

TEST(MinusClassNumber, AgreesWithFloatingPointFormula) {
    for (std::uint64_t p = 3; p <= 60; p += 2) {
        if (!is_prime(p)) continue;
        const long double approx = oracle::minus_class_number_float(p);
        EXPECT_NEAR(static_cast<double>(approx), minus_class_number(p).get_d(), 1e-6 * std::max(1.0L, approx)) << p;
    }
}

TEST(Validation, BundledDataIsConsistent) {
    std::vector<ClassGroupRecord> below_100;
    for (const auto& r : bundled().records)
        if (r.p < 100) below_100.push_back(r);
    const auto report = validate_records(below_100);
    EXPECT_TRUE(report.ok());
    for (const auto& e : report.entries) ASSERT_TRUE(e.h_minus.has_value());
}

TEST(Validation, FlagsWrongOrder) {
    ClassGroupRecord r = record(29, grp({}), grp({2}));
    r.cl_minus = grp({4});
    const auto report = validate_records({r});
    EXPECT_FALSE(report.ok());
    EXPECT_GE(report.issues.size(), 1u);
    EXPECT_EQ(report.issues[0].p, 29u);
}

TEST(Validation, MinusModTwoOnly) {
    // Without the full group only divisibility and parity are checked.
    EXPECT_TRUE(validate_records({record(29, grp({}), grp({2, 2, 2}))}).ok());
    EXPECT_TRUE(validate_records({record(29, grp({}), grp({2}))}).ok());
    EXPECT_FALSE(validate_records({record(29, grp({}), grp({2, 2, 2, 2}))}).ok());
    EXPECT_FALSE(validate_records({record(31, grp({}), grp({2}))}).ok());
    EXPECT_FALSE(validate_records({record(29, grp({}), grp({}))}).ok());
}

}  // namespace
}  // namespace lensclass
