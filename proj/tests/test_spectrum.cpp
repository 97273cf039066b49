#include "cyclocode/spectrum.hpp"

#include <gtest/gtest.h>

using namespace cyclo;

namespace {

SizeSpectrum make(std::map<i64, int> m) {
    SizeSpectrum s;
    for (auto [t, c] : m) s.entries[t] = c;
    return s;
}

}  // namespace

TEST(PossibleSizes, Values) {
    EXPECT_EQ(possible_sizes(56, 3), (std::set<i64>{1, 2, 6}));
    EXPECT_EQ(possible_sizes(52, 5), (std::set<i64>{1, 4}));
    EXPECT_EQ(possible_sizes(3, 2), (std::set<i64>{1, 2}));
}

TEST(CountBySize, Values) {
    EXPECT_EQ(count_by_size_general(52, 5, 4), 12);
    EXPECT_EQ(count_by_size_general(52, 5, 1), 4);
    EXPECT_EQ(count_by_size_general(56, 3, 6), 8);
    EXPECT_EQ(count_by_size_general(56, 3, 5), 0);
}

TEST(Spectrum, ClosedFormValues) {
    EXPECT_EQ(spectrum_closed_form(FamilyParams::make(3, 3, 2)), make({{1, 2}, {2, 3}, {6, 8}}));
    EXPECT_EQ(spectrum_closed_form(FamilyParams::make(5, 2, 2)), make({{1, 4}, {4, 12}}));
    EXPECT_EQ(spectrum_closed_form(FamilyParams::make(2, 3, 1)), make({{1, 1}, {2, 1}, {6, 1}}));
}

TEST(Spectrum, ThreeWayAgreement) {
    for (i64 q : {2, 3, 4, 5, 7, 8, 9})
        for (i64 m = 1; m <= 6; ++m)
            for (i64 lam : divisors(q - 1)) {
                auto fp = FamilyParams::make(q, m, lam);
                if (fp.n > 200000) continue;
                auto oracle = spectrum_oracle(CosetPartition(fp));
                auto general = spectrum_general(fp);
                auto closed = spectrum_closed_form(fp);
                EXPECT_EQ(oracle, general) << q << ' ' << m << ' ' << lam;
                EXPECT_EQ(oracle, closed) << q << ' ' << m << ' ' << lam;
                EXPECT_EQ(closed.weighted_total(), fp.n);
                if (auto cor = spectrum_corollary(fp)) EXPECT_EQ(*cor, closed);
            }
}

TEST(Spectrum, CorollaryScope) {
    EXPECT_TRUE(spectrum_corollary(FamilyParams::make(5, 3, 4)));
    EXPECT_TRUE(spectrum_corollary(FamilyParams::make(5, 3, 1)));
    EXPECT_FALSE(spectrum_corollary(FamilyParams::make(5, 3, 2)));
}

TEST(Spectrum, DerivedFields) {
    auto s = spectrum_closed_form(FamilyParams::make(5, 2, 2));
    EXPECT_EQ(s.v, 1);
    EXPECT_EQ(s.m0, 1);
    EXPECT_EQ(s.h, 2);
}
