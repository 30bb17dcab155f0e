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

#include "lensclass/classify.hpp"
#include "oracles.hpp"

namespace lensclass {
namespace {

const ClassGroupDataset& bundled() {
    static const ClassGroupDataset data = load_dataset(LENSCLASS_DEFAULT_DATA);
    return data;
}

TEST(ClassifyActions, KindFollowsParity) {
    for (std::uint64_t ell : {3u, 5u, 7u, 15u, 21u, 105u}) {
        for (std::uint64_t n = 1; n <= 12; ++n) {
            const auto r = classify_actions(ell, n);
            const bool single = n % 2 == 0 || n == 1;
            EXPECT_EQ(r.kind == ClassificationResult::Kind::single_class, single) << ell << " " << n;
            EXPECT_EQ(r.countably_infinite, !single);
            EXPECT_EQ(r.strata.empty(), single);
        }
    }
}

TEST(ClassifyActions, Examples) {
    EXPECT_EQ(classify_actions(5, 4).kind, ClassificationResult::Kind::single_class);
    EXPECT_EQ(classify_actions(3, 1).kind, ClassificationResult::Kind::single_class);
    const auto r = classify_actions(15, 5);
    ASSERT_EQ(r.strata.size(), oracle::qdk_bfs(3, 3).size() + oracle::qdk_bfs(5, 3).size() + oracle::qdk_bfs(15, 3).size());
    for (const auto& s : r.strata) {
        EXPECT_EQ(s.lattice_rank, (s.d - 1) / 2);
        EXPECT_EQ(s.fiber_bound, 8 * std::gcd<std::uint64_t>(3, totient(s.d) / 2));
    }
}

TEST(ClassifyActions, RejectsBadEll) {
    for (std::uint64_t ell : {0u, 1u, 2u, 9u, 12u, 45u}) {
        try {
            classify_actions(ell, 5);
            ADD_FAILURE() << ell;
        } catch (const PreconditionError& e) {
            EXPECT_NE(std::string(e.what()).find("square-free odd"), std::string::npos);
        }
    }
    EXPECT_THROW(classify_actions(15, 0), PreconditionError);
}

TEST(ClassifyActions, StrataAreOrdered) {
    const auto r = classify_actions(105, 7);
    for (std::size_t i = 1; i < r.strata.size(); ++i) {
        const auto& a = r.strata[i - 1];
        const auto& b = r.strata[i];
        EXPECT_TRUE(a.d < b.d || (a.d == b.d && a.q_class < b.q_class));
    }
}

TEST(ClassifyActions, DescriptorsFromData) {
    const auto r = classify_actions(29 * 3, 3, &bundled());
    ASSERT_FALSE(r.strata.empty());
    bool saw_29 = false, saw_composite = false;
    for (const auto& s : r.strata) {
        if (s.d == 29) {
            saw_29 = true;
            const auto* h = std::get_if<H0Result>(&s.h0_descriptor);
            ASSERT_NE(h, nullptr);
            EXPECT_EQ(h->to_string(), "(2,2,2)");
        }
        if (s.d == 87) {
            saw_composite = true;
            EXPECT_TRUE(std::holds_alternative<SymbolicH0>(s.h0_descriptor));
            EXPECT_EQ(to_string(s.h0_descriptor), "H_0(C_2; Wh_0(C_87))");
        }
    }
    EXPECT_TRUE(saw_29 && saw_composite);
    ASSERT_EQ(r.assumptions.size(), 1u);
    EXPECT_EQ(r.assumptions[0], kRimAssumption);
}

TEST(ClassifyActions, GrhAssumptionRecorded) {
    const auto r = classify_actions(191, 3, &bundled());
    ASSERT_EQ(r.assumptions.size(), 2u);
    EXPECT_NE(r.assumptions[1].find("Riemann"), std::string::npos);
    EXPECT_TRUE(classify_actions(191, 3).assumptions.empty());
}

TEST(StratumCount, Examples) {
    for (std::uint64_t k = 2; k < 8; ++k) EXPECT_EQ(stratum_count(3, k), 1u);
    EXPECT_EQ(stratum_count(7, 2), 1u);
    EXPECT_EQ(stratum_count(5, 2), 2u);
    EXPECT_THROW(stratum_count(5, 1), PreconditionError);
}

TEST(StratumCount, MatchesClassification) {
    for (std::uint64_t ell : {3u, 5u, 15u, 21u, 35u, 105u})
        for (std::uint64_t k = 2; k <= 6; ++k) EXPECT_EQ(stratum_count(ell, k), classify_actions(ell, 2 * k - 1).strata.size());
}

TEST(HModReport, Examples) {
    const auto r52 = hmod_report(5, 2);
    EXPECT_EQ(r52.a_order, 50);
    EXPECT_EQ(r52.e, 4u);
    EXPECT_EQ(r52.b_order, 4u);
    EXPECT_EQ(r52.total_order, 400);
    EXPECT_EQ(r52.effective_quotient_order, 16u);
    EXPECT_FALSE(r52.discrepancy_flag);

    const auto r72 = hmod_report(7, 2);
    EXPECT_EQ(r72.a_order, 98);
    EXPECT_EQ(r72.e, 2u);
    EXPECT_EQ(r72.b_order, 2u);
    EXPECT_EQ(r72.total_order, 392);
    EXPECT_EQ(r72.effective_quotient_order, 8u);

    const auto r152 = hmod_report(15, 2);
    EXPECT_EQ(r152.e, 4u);
    EXPECT_EQ(r152.b_order, 8u);
    EXPECT_TRUE(r152.discrepancy_flag);
}

TEST(HModReport, QuotientOrderMatchesFiberBound) {
    for (std::uint64_t d = 3; d <= 101; d += 2) {
        if (!is_square_free(d)) continue;
        for (std::uint64_t k = 2; k <= 10; ++k) {
            const auto r = hmod_report(d, k);
            EXPECT_EQ(r.effective_quotient_order, indeterminacy_bound(d, k)) << d << " " << k;
            EXPECT_EQ(r.e, 2 * std::gcd(k, totient(d) / 2));
            // Prime d: the units are cyclic, so the exponent-e subgroup has order e.
            if (is_prime(d)) { EXPECT_FALSE(r.discrepancy_flag); }
        }
    }
}

TEST(HybridStructure, Examples) {
    EXPECT_EQ(hybrid_structure_descriptor(7, 2, H0Result::exact(FgAbGroup(), false, 'a')).to_string(), "(Z^3, 0)");
    EXPECT_EQ(hybrid_structure_descriptor(29, 2, H0Result::exact(FgAbGroup(0, {2, 2, 2}), false, 'a')).to_string(),
              "(Z^14, (2,2,2))");
    const auto h163 = hybrid_structure_descriptor(163, 2, H0Result::interval(4, 16, true));
    EXPECT_EQ(h163.lattice, FgAbGroup::free(81));
    EXPECT_EQ(h163.to_string(), "(Z^81, 4 <= order <= 16*)");
}

TEST(SiQuotient, SignConventionPin) {
    const std::vector<Integer> z3{3};
    // Stored involution mu = -id: A/(1 + mu)A = A.
    const auto minus = GroupWithInvolution::diagonal(z3, IntMatrix{{-1}});
    EXPECT_EQ(si_quotient(minus), FgAbGroup(0, {3}));
    EXPECT_EQ(si_quotient(minus), coinvariants(minus.negated()));
    // mu = id: A/2A = 0 on Z/3.
    EXPECT_EQ(si_quotient(GroupWithInvolution::diagonal(z3, IntMatrix{{1}})), FgAbGroup());
    const std::vector<Integer> z2{2};
    EXPECT_EQ(si_quotient(GroupWithInvolution::diagonal(z2, IntMatrix{{1}})), FgAbGroup(0, {2}));
}

TEST(SiQuotient, AgreesWithBruteForce) {
    std::mt19937_64 rng(2718);
    for (int t = 0; t < 500; ++t) {
        const auto inv = oracle::random_involution(rng, 200, t % 2 == 1);
        const GroupWithInvolution g(inv.relations, inv.action);
        EXPECT_TRUE(oracle::same_group(si_quotient(g), oracle::brute_homology(inv.model, 0, 0, 1, 1)));
    }
}

}  // namespace
}  // namespace lensclass
