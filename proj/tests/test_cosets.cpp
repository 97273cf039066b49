#include "cyclocode/cosets.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cyclo;

namespace {

std::vector<FamilyParams> small_families() {
    std::vector<FamilyParams> out;
    for (i64 q : {2, 3, 4, 5, 7, 8, 9})
        for (i64 m = 1; m <= 4; ++m)
            for (i64 lam : divisors(q - 1)) {
                auto fp = FamilyParams::make(q, m, lam);
                if (fp.n <= 6000) out.push_back(fp);
            }
    return out;
}

}  // namespace

TEST(FamilyParams, Validation) {
    auto fp = FamilyParams::make(3, 3, 2);
    EXPECT_EQ(fp.n, 56);
    EXPECT_EQ(fp.M, 28);
    EXPECT_THROW(FamilyParams::make(6, 2, 1), std::invalid_argument);
    EXPECT_THROW(FamilyParams::make(5, 2, 3), std::invalid_argument);
    EXPECT_THROW(FamilyParams::make(5, 0, 1), std::invalid_argument);
    EXPECT_THROW(FamilyParams::make(5, 2, 0), std::invalid_argument);
}

TEST(Coset, Orbits) {
    auto fp = FamilyParams::make(3, 3, 2);
    Coset c = coset(fp, 1);
    EXPECT_EQ(c.elements, (std::vector<i64>{1, 3, 9, 27, 25, 19}));
    EXPECT_EQ(c.leader, 1);
    EXPECT_EQ(c.size, 6);
    EXPECT_EQ(coset(fp, 28).elements, (std::vector<i64>{28}));
    Coset d = coset(FamilyParams::make(5, 2, 2), 13);
    EXPECT_EQ(d.leader, 13);
    EXPECT_EQ(d.size, 1);
    EXPECT_THROW(coset(fp, 56), std::invalid_argument);
    EXPECT_THROW(coset(fp, -1), std::invalid_argument);
}

TEST(Partition, GoldenLists) {
    CosetPartition a(FamilyParams::make(3, 3, 2));
    EXPECT_EQ(a.leaders(), (std::vector<i64>{0, 1, 2, 4, 5, 7, 8, 10, 11, 14, 28, 29, 35}));
    CosetPartition b(FamilyParams::make(5, 2, 2));
    EXPECT_EQ(b.leaders(), (std::vector<i64>{0, 1, 2, 3, 4, 6, 7, 8, 9, 13, 14, 16, 26, 27, 29, 39}));
    CosetPartition c(FamilyParams::make(2, 1, 1));
    ASSERT_EQ(c.cosets().size(), 2u);
    EXPECT_EQ(c.cosets()[1].elements, (std::vector<i64>{1, 2}));
}

TEST(Partition, InvariantsOnSmallFamilies) {
    for (const auto& fp : small_families()) {
        CosetPartition p(fp);
        std::vector<int> seen(static_cast<std::size_t>(fp.n), 0);
        i64 total = 0;
        for (const auto& c : p.cosets()) {
            total += c.size;
            EXPECT_TRUE(c.size == 1 || c.size % 2 == 0);
            EXPECT_EQ(c.elements.front(), c.leader);
            EXPECT_EQ(c.elements.back() * fp.q % fp.n, c.elements.front());
            for (i64 x : c.elements) {
                ++seen[x];
                EXPECT_EQ(residue_a(fp, x), c.residue_a);
                EXPECT_EQ(p.leader_of(x), c.leader);
            }
        }
        EXPECT_EQ(total, fp.n);
        for (int s : seen) EXPECT_EQ(s, 1);
        EXPECT_EQ(mult_order(fp.q, fp.n), 2 * fp.m);
    }
}

TEST(LeaderOf, Values) {
    EXPECT_EQ(leader_of(FamilyParams::make(5, 2, 2), 47), 27);
    EXPECT_EQ(leader_of(FamilyParams::make(3, 3, 2), 55), 29);
    EXPECT_EQ(leader_of(FamilyParams::make(3, 3, 2), 0), 0);
}

TEST(Reflect, Values) {
    auto fp = FamilyParams::make(3, 3, 2);
    EXPECT_EQ(reflect(fp, 5), 23);
    EXPECT_EQ(reflect(fp, 29), 55);
    EXPECT_EQ(reflect(fp, 0), 0);
}

TEST(Reflect, StaysInCoset) {
    for (const auto& fp : small_families()) {
        CosetPartition p(fp);
        for (i64 g = 0; g < fp.n; ++g) EXPECT_TRUE(p.same_coset(g, reflect(fp, g))) << fp.n << ' ' << g;
    }
}

TEST(Fold, Values) {
    auto fp = FamilyParams::make(5, 2, 2);
    EXPECT_EQ(fold(fp, 23, 0), 3);
    EXPECT_EQ(fold(fp, 11, 1), 3);
    EXPECT_EQ(fold(fp, 10, 0), 10);
    // the boundary x = aM takes the identity branch
    EXPECT_EQ(fold(fp, 26, 0), 26);
}

TEST(Fold, FullPeriodMinimumIsLeader) {
    for (const auto& fp : small_families()) {
        CosetPartition p(fp);
        for (i64 g = 0; g < fp.n; ++g) {
            i64 lo = fp.n;
            for (i64 t = 0; t < p.coset_of(g).size; ++t) {
                i64 x = fold(fp, g, t);
                EXPECT_TRUE(p.same_coset(g, x));
                lo = std::min(lo, x);
            }
            EXPECT_EQ(lo, p.leader_of(g));
        }
    }
}

TEST(Fold, HalfPeriodCounterexample) {
    // over half the period the minimum misses the leader here
    auto fp = FamilyParams::make(3, 2, 2);
    EXPECT_FALSE(half_period_fold_holds(fp, 15));
    EXPECT_TRUE(half_period_fold_holds(fp, 1));
}

TEST(Negation, Values) {
    auto fp = FamilyParams::make(3, 3, 2);
    CosetPartition p(fp);
    std::vector<i64> self;
    for (i64 l : p.leaders())
        if (negation_in_same_coset(p, l)) self.push_back(l);
    EXPECT_EQ(self, (std::vector<i64>{0, 2, 4, 8, 10, 14, 28}));
    EXPECT_TRUE(negation_in_same_coset(fp, 2, Mode::closed_form));
    EXPECT_FALSE(negation_in_same_coset(fp, 1, Mode::bruteforce));
    EXPECT_TRUE(negation_in_same_coset(fp, 0, Mode::closed_form));
}

TEST(Negation, ClosedFormMatchesBruteForce) {
    for (const auto& fp : small_families()) {
        CosetPartition p(fp);
        for (i64 g = 0; g < fp.n; ++g)
            EXPECT_EQ(negation_in_same_coset(fp, g, Mode::closed_form), negation_in_same_coset(p, g))
                << fp.q << ' ' << fp.m << ' ' << fp.lambda << " gamma=" << g;
    }
}

TEST(Partition, GenericModulus) {
    CosetPartition p(21, 2);
    EXPECT_FALSE(p.params());
    EXPECT_EQ(p.leaders(), (std::vector<i64>{0, 1, 3, 5, 7, 9}));
    EXPECT_THROW(CosetPartition(20, 2), std::invalid_argument);
}
