#include "indec/lemmas.hpp"

#include <gtest/gtest.h>

using namespace indec;

TEST(Lemmas, SimplestNormMonotonicity)
{
    for (long a = 5; a <= 12; ++a) {
        const auto r = simplest_norm_monotonicity(a);
        EXPECT_TRUE(r.passed()) << r.counterexamples.front();
        EXPECT_GT(r.cases, 0U);
    }
    EXPECT_EQ(simplest_norm_monotonicity(4).cases, 0U);
}

TEST(Lemmas, SimplestOrbitProperties)
{
    for (long a = 0; a <= 12; ++a) {
        const auto r = simplest_orbit_properties(a);
        EXPECT_TRUE(r.passed()) << r.counterexamples.front();
    }
}

TEST(Lemmas, ThomasBetaLemmas)
{
    for (auto [a, b] : std::vector<std::pair<long, long>>{{3, 6}, {4, 7}, {5, 7}, {2, 6}, {3, 8}}) {
        const auto p = OrderParams::thomas(a, b);
        for (const auto& r : {thomas_beta_exclusion(p, 5), thomas_beta_smallest_conjugate(p, 5)}) {
            EXPECT_TRUE(r.passed()) << r.counterexamples.front();
        }
    }
    EXPECT_GT(thomas_beta_smallest_conjugate(OrderParams::thomas(3, 6), 5).cases, 0U);
}

TEST(Lemmas, ThomasDescriptorLemmas)
{
    for (long a = 2; a <= 5; ++a) {
        for (long b = a + 2; b <= a + 6; ++b) {
            const auto p = OrderParams::thomas(a, b);
            for (const auto& r : {thomas_descriptors_below_one(p), thomas_norm_comparison(p)}) {
                EXPECT_TRUE(r.passed()) << r.counterexamples.front();
            }
        }
    }
}

TEST(Lemmas, ReportRecordsCounterexamples)
{
    LemmaReport r{"demo", 0, {}};
    r.check(true, "fine");
    r.check(false, "(1,2,3)");
    EXPECT_EQ(r.cases, 2U);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.counterexamples, std::vector<std::string>{"(1,2,3)"});
}

TEST(Lemmas, ThomasBetaElement)
{
    const auto p = OrderParams::thomas(3, 6);
    // beta(t, v2, v3) = t - (b-a+1) v2 - (b-a+1) b v3 + v2 rho + v3 rho^2
    EXPECT_EQ(thomas_beta(p, 2, 1, -1), OrderElement(p, 2 - 4 + 24, 1, -1));
}
