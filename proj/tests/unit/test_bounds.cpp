#include "indec/bounds.hpp"
#include "indec/codifferent.hpp"

#include <gtest/gtest.h>

using namespace indec;

TEST(NormFormula, Examples)
{
    const auto s3 = OrderParams::simplest(3);
    EXPECT_EQ(norm_formula_simplest(1, 1, 3), norm(descriptor_to_element(IndecDescriptor::simplest_vW(s3, 1, 1))));
    EXPECT_EQ(norm_formula_simplest(0, 0, 0), 3);
    EXPECT_EQ(norm(descriptor_to_element(IndecDescriptor::simplest_vW(OrderParams::simplest(0), 0, 0))), 3);
    EXPECT_EQ(norm_formula_ennola(1, 3), 19);
    EXPECT_EQ(norm_formula_thomas(0, 0, 2, 4), 1);
}

TEST(NormFormula, MatchesCharPolyOnWideGrids)
{
    for (long a = -1; a <= 25; ++a) {
        const auto r = check_norm_formula(closed_form_indecomposables(OrderParams::simplest(a)));
        EXPECT_FALSE(r.has_value()) << r->describe();
    }
    for (long a = 3; a <= 25; ++a) {
        const auto r = check_norm_formula(closed_form_indecomposables(OrderParams::ennola(a)));
        EXPECT_FALSE(r.has_value()) << r->describe();
    }
    for (long a = 2; a <= 8; ++a) {
        for (long b = a + 2; b <= a + 10; ++b) {
            const auto r = check_norm_formula(closed_form_indecomposables(OrderParams::thomas(a, b)));
            EXPECT_FALSE(r.has_value()) << r->describe();
        }
    }
}

TEST(NormFormula, MutationIsCaught)
{
    const auto descriptors = closed_form_indecomposables(OrderParams::thomas(3, 6));
    const auto r = check_norm_formula(descriptors, [](const IndecDescriptor& d) { return Integer(norm_formula(d) + 1); });
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->formula, r->oracle + 1);
    EXPECT_NE(r->describe().find("thomas(a=3, b=6)"), std::string::npos);
}

TEST(NormBound, Examples)
{
    EXPECT_EQ(norm_bound(OrderParams::simplest(4)), 47);
    EXPECT_EQ(norm_bound(OrderParams::simplest(1)), 13);
    EXPECT_EQ(norm_bound(OrderParams::ennola(3)), 19);
    EXPECT_EQ(norm_bound(OrderParams::thomas(2, 4)), 16);
}

TEST(NormBound, AttainedOnGrids)
{
    std::vector<OrderParams> ps;
    for (long a = -1; a <= 30; ++a) ps.push_back(OrderParams::simplest(a));
    for (long a = 3; a <= 30; ++a) ps.push_back(OrderParams::ennola(a));
    for (long a = 2; a <= 7; ++a) {
        for (long b = a + 2; b <= 3 * a + 4; ++b) ps.push_back(OrderParams::thomas(a, b));
    }
    for (const auto& p : ps) {
        const auto r = bound_report(p);
        EXPECT_TRUE(r.matches) << p.describe() << " bound " << r.claimed_bound << " attained " << r.attained_norm;
    }
}

TEST(NormBound, ThomasClosedFormCoverage)
{
    EXPECT_TRUE(norm_bound_detail(OrderParams::thomas(2, 4)).closed_form);
    EXPECT_TRUE(norm_bound_detail(OrderParams::thomas(4, 8)).closed_form);
}

TEST(MinTraceFormula, ThomasValues)
{
    EXPECT_EQ(min_trace_formula_thomas(0, 3, 4, 8), 4);
    for (long v = 0; v <= 3; ++v) EXPECT_EQ(min_trace_formula_thomas(v, 4 * v, 4, 9), 1);
    EXPECT_EQ(min_trace_cap_thomas(4, 8), 4);
    EXPECT_EQ(min_trace_cap_thomas(4, 6), 3);
    EXPECT_EQ(min_trace_upper(IndecDescriptor::ennola_w(OrderParams::ennola(4), 2)), 2);
}

TEST(Witness, Examples)
{
    const auto w1 = witness_large_min_trace(1);
    EXPECT_EQ(w1.params, OrderParams::thomas(2, 4));
    EXPECT_EQ(w1.achieved(), 2);
    EXPECT_FALSE(w1.confirmed.has_value());

    const auto w3 = witness_large_min_trace(3, true);
    EXPECT_EQ(w3.params, OrderParams::thomas(4, 8));
    EXPECT_EQ(w3.descriptor.v, 0);
    EXPECT_EQ(w3.descriptor.w, 3);
    EXPECT_EQ(w3.confirmed, 4);
    EXPECT_THROW(witness_large_min_trace(0), std::invalid_argument);
}

TEST(Witness, FormulaAgreesWithExhaustiveSearch)
{
    for (std::int64_t n = 1; n <= 5; ++n) {
        const auto w = witness_large_min_trace(n, n <= 4);
        EXPECT_GT(w.achieved(), n);
        EXPECT_EQ(w.formula_value, n + 1);
        if (w.confirmed) EXPECT_EQ(*w.confirmed, w.formula_value);
        EXPECT_TRUE(w.descriptor.valid());
    }
}
