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

#include "lensclass/abelian.hpp"
#include "oracles.hpp"

namespace lensclass {
namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

void expect_valid_smith(const IntMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    ASSERT_EQ(s.left * m * s.right, s.diagonal) << m.to_string();
    EXPECT_EQ(abs(oracle::determinant(s.left)), 1);
    EXPECT_EQ(abs(oracle::determinant(s.right)), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) { EXPECT_EQ(s.diagonal(i, j), 0); }
    const std::size_t r = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < r; ++i) {
        EXPECT_GE(s.diagonal(i, i), 0);
        if (i + 1 < r) { EXPECT_TRUE(divides(s.diagonal(i, i), s.diagonal(i + 1, i + 1))); }
    }
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return rng() % 2 ? u : IntMatrix(-u);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int step = 0; step < 8; ++step) {
        const std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        IntMatrix e = IntMatrix::identity(n);
        e(i, j) = coef(rng);
        u = e * u;
    }
    return u;
}

TEST(SmithNormalForm, ZeroMatrix) {
    const SmithForm s = smith_normal_form(IntMatrix{{0}});
    EXPECT_EQ(s.diagonal, (IntMatrix{{0}}));
}

TEST(SmithNormalForm, Identity) {
    const SmithForm s = smith_normal_form(IntMatrix::identity(3));
    EXPECT_EQ(s.diagonal, IntMatrix::identity(3));
}

TEST(SmithNormalForm, TwoByTwo) {
    const IntMatrix m{{2, 4}, {6, 8}};
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.diagonal, (IntMatrix{{2, 0}, {0, 4}}));
    expect_valid_smith(m);
}

TEST(SmithNormalForm, EmptyMatrix) {
    const SmithForm s = smith_normal_form(IntMatrix(0, 0));
    EXPECT_TRUE(s.diagonal.empty());
    EXPECT_EQ(cokernel(IntMatrix(2, 0)), FgAbGroup::free(2));
}

TEST(SmithNormalForm, RandomMatrices) {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int t = 0; t < 300; ++t) expect_valid_smith(random_matrix(rng, dim(rng), dim(rng), 50));
}

TEST(SmithNormalForm, RankDeficient) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const IntMatrix a = random_matrix(rng, 5, 2, 9), b = random_matrix(rng, 2, 6, 9);
        const IntMatrix m = a * b;
        expect_valid_smith(m);
        EXPECT_LE(smith_normal_form(m).rank(), 2u);
    }
}

TEST(Cokernel, Examples) {
    EXPECT_EQ(cokernel(IntMatrix{{0}}), FgAbGroup::free(1));
    EXPECT_EQ(cokernel(IntMatrix::diagonal(ints({1, 6}))), FgAbGroup(0, ints({6})));
    EXPECT_EQ(cokernel(IntMatrix{{2, 0}, {0, 4}}), FgAbGroup(0, ints({2, 4})));
    EXPECT_EQ(cokernel(IntMatrix::diagonal(ints({2, 3}))), FgAbGroup(0, ints({6})));
    EXPECT_EQ(cokernel(IntMatrix{{2, 0}, {0, 4}}).to_string(), "Z/2 + Z/4");
}

TEST(Cokernel, InvariantUnderUnimodularChange) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const IntMatrix m = random_matrix(rng, r, c, 12);
        EXPECT_EQ(cokernel(random_unimodular(rng, r) * m * random_unimodular(rng, c)), cokernel(m));
    }
}

TEST(FgAbGroup, CanonicalForm) {
    EXPECT_THROW(FgAbGroup(0, ints({4, 2})), PreconditionError);
    EXPECT_THROW(FgAbGroup(0, ints({1})), PreconditionError);
    EXPECT_EQ(FgAbGroup::from_cyclic_orders(ints({4, 6, 1})), FgAbGroup(0, ints({2, 12})));
    EXPECT_EQ(FgAbGroup::from_cyclic_orders(ints({0, 3})), FgAbGroup(1, ints({3})));
    EXPECT_EQ(FgAbGroup(0, ints({2, 2, 2})).tuple_notation(), "(2,2,2)");
    EXPECT_EQ(FgAbGroup().tuple_notation(), "0");
    EXPECT_EQ(FgAbGroup(2, ints({2})).to_string(), "Z^2 + Z/2");
    EXPECT_EQ(FgAbGroup(0, ints({2, 12})).torsion_count(2), 4);
    EXPECT_EQ(FgAbGroup(0, ints({2, 12})).mod_two(), FgAbGroup(0, ints({2, 2})));
    EXPECT_FALSE(FgAbGroup(1, {}).order().has_value());
}

GroupWithInvolution diag(std::initializer_list<long> orders, IntMatrix action) {
    const auto o = ints(orders);
    return GroupWithInvolution::diagonal(o, std::move(action));
}

TEST(Coinvariants, Examples) {
    EXPECT_EQ(coinvariants(diag({3}, IntMatrix{{1}})), FgAbGroup(0, ints({3})));
    EXPECT_EQ(coinvariants(diag({3}, IntMatrix{{-1}})), FgAbGroup());
    EXPECT_EQ(coinvariants(diag({2, 2}, IntMatrix{{0, 1}, {1, 0}})), FgAbGroup(0, ints({2})));
}

TEST(TateCohomology, Examples) {
    EXPECT_EQ(tate_cohomology(diag({0}, IntMatrix{{1}}), 0), FgAbGroup(0, ints({2})));
    EXPECT_EQ(tate_cohomology(diag({0}, IntMatrix{{-1}}), 0), FgAbGroup());
    const auto swap = diag({0, 0}, IntMatrix{{0, 1}, {1, 0}});
    EXPECT_EQ(tate_cohomology(swap, 0), FgAbGroup());
    EXPECT_EQ(tate_cohomology(swap, 1), FgAbGroup());
    EXPECT_THROW(tate_cohomology(swap, 2), PreconditionError);
}

TEST(SymmetricEvenQuotient, Examples) {
    EXPECT_EQ(symmetric_even_quotient(diag({2}, IntMatrix{{1}}), 1), FgAbGroup(0, ints({2})));
    EXPECT_EQ(symmetric_even_quotient(diag({0, 0, 0}, IntMatrix::identity(3)), -1), FgAbGroup());
    EXPECT_EQ(symmetric_even_quotient(diag({4}, IntMatrix{{-1}}), -1), FgAbGroup(0, ints({2})));
}

TEST(GroupWithInvolution, RejectsInvalidActions) {
    // x -> 2x on Z/5 squares to 4x.
    EXPECT_THROW(diag({5}, IntMatrix{{2}}), PreconditionError);
    // e1 -> e2 does not respect 2 e1 = 0 when e2 has order 4.
    EXPECT_THROW(diag({2, 4}, IntMatrix{{0, 0}, {1, 1}}), PreconditionError);
    // Not square.
    EXPECT_THROW(GroupWithInvolution(IntMatrix::identity(2), IntMatrix(2, 3)), PreconditionError);
    // Multiplication by 3 on Z/8 is a genuine involution.
    EXPECT_NO_THROW(diag({8}, IntMatrix{{3}}));
}

TEST(GroupWithInvolution, FreeModules) {
    // Z[C_2] = Z^2 with the swap is free: all Tate groups vanish, coinvariants Z.
    const auto swap = diag({0, 0}, IntMatrix{{0, 1}, {1, 0}});
    EXPECT_EQ(coinvariants(swap), FgAbGroup::free(1));
    EXPECT_EQ(symmetric_even_quotient(swap, 1), FgAbGroup());
    // Z with -1: coinvariants Z/2, Tate^1 = Z/2.
    const auto sign = diag({0}, IntMatrix{{-1}});
    EXPECT_EQ(coinvariants(sign), FgAbGroup(0, ints({2})));
    EXPECT_EQ(tate_cohomology(sign, 1), FgAbGroup(0, ints({2})));
}

// Every random case is checked against listing all elements of the group.
TEST(AbelianCalculus, AgreesWithBruteForce) {
    std::mt19937_64 rng(424242);
    for (int t = 0; t < 250; ++t) {
        const auto inv = oracle::random_involution(rng, 256, t % 3 != 0);
        const GroupWithInvolution g(inv.relations, inv.action);
        const auto& m = inv.model;
        SCOPED_TRACE(inv.relations.to_string() + " / " + inv.action.to_string());
        EXPECT_TRUE(oracle::same_group(g.group(), oracle::brute_homology(m, 0, 0, 0, 0)));
        EXPECT_TRUE(oracle::same_group(coinvariants(g), oracle::brute_homology(m, 0, 0, 1, -1)));
        EXPECT_TRUE(oracle::same_group(tate_cohomology(g, 0), oracle::brute_homology(m, 1, -1, 1, 1)));
        EXPECT_TRUE(oracle::same_group(tate_cohomology(g, 1), oracle::brute_homology(m, 1, 1, 1, -1)));
        for (int s : {1, -1})
            EXPECT_TRUE(oracle::same_group(symmetric_even_quotient(g, s), oracle::brute_homology(m, 1, -s, 1, s)));
    }
}

TEST(AbelianCalculus, TateIsElementaryTwo) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto inv = oracle::random_involution(rng);
        const GroupWithInvolution g(inv.relations, inv.action);
        EXPECT_TRUE(tate_cohomology(g, 0).is_elementary_two());
        EXPECT_TRUE(tate_cohomology(g, 1).is_elementary_two());
    }
}

TEST(Lattice, SubquotientRequiresContainment) {
    EXPECT_THROW(lattice::subquotient(IntMatrix{{2}}, IntMatrix{{3}}), ConsistencyError);
    EXPECT_EQ(lattice::subquotient(IntMatrix{{2}}, IntMatrix{{6}}), FgAbGroup(0, ints({3})));
}

}  // namespace
}  // namespace lensclass
