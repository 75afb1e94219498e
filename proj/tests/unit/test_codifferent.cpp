#include "indec/codifferent.hpp"
#include "indec/embeddings.hpp"
#include "indec/indecomposable.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace indec;
using indec::testing::random_element;
using indec::testing::sample_orders;

TEST(Pairing, EulerFormulaOracle)
{
    // Tr(gamma / f'(rho)) is the rho^2 coefficient of gamma.
    std::mt19937_64 rng(41);
    for (const auto& p : sample_orders()) {
        for (int i = 0; i < 100; ++i) {
            const auto g = random_element(p, rng, 20);
            const auto x = random_element(p, rng, 20);
            EXPECT_EQ(pairing_trace({g}, x), (g * x)[2]) << p.describe();
        }
    }
}

TEST(Pairing, BilinearAndIntegral)
{
    std::mt19937_64 rng(42);
    for (const auto& p : sample_orders()) {
        for (int i = 0; i < 50; ++i) {
            const auto g = random_element(p, rng, 20);
            const auto h = random_element(p, rng, 20);
            const auto x = random_element(p, rng, 20);
            const auto y = random_element(p, rng, 20);
            EXPECT_EQ(pairing_trace({g}, x + y), pairing_trace({g}, x) + pairing_trace({g}, y));
            EXPECT_EQ(pairing_trace({g + h}, x), pairing_trace({g}, x) + pairing_trace({h}, x));
            EXPECT_EQ(pairing_trace({g}, x * y), pairing_trace({g * x}, y));
            EXPECT_EQ(pairing_trace({g}, OrderElement::zero(p)), 0);
        }
        const CodifferentElement d{OrderElement(p, 3, 1, 4)};
        EXPECT_EQ(trace(d), pairing_trace(d, OrderElement::one(p)));
    }
}

TEST(Pairing, MixingOrdersThrows)
{
    const CodifferentElement d{OrderElement::one(OrderParams::thomas(2, 4))};
    EXPECT_THROW(pairing_trace(d, OrderElement::one(OrderParams::thomas(2, 5))), IncompatibleOrderError);
}

TEST(Codifferent, DerivativeElement)
{
    for (const auto& p : sample_orders()) {
        const auto d = derivative_element(p);
        const auto& f = p.minimal_poly();
        EXPECT_EQ(d, OrderElement(p, {f.c1, Integer(2 * f.c2), Integer(3)}));
        // N(f'(rho)) = -disc(f) for a monic cubic.
        EXPECT_EQ(norm(d), -f.discriminant());
    }
}

TEST(Codifferent, TotalPositivity)
{
    const auto p = OrderParams::thomas(3, 7);
    EXPECT_TRUE(is_totally_positive_codiff(delta_v(p)));
    EXPECT_TRUE(is_totally_positive_codiff(delta_w(p)));
    EXPECT_FALSE(is_totally_positive_codiff({OrderElement::zero(p)}));
    EXPECT_FALSE(is_totally_positive_codiff({-delta_v(p).num}));
}

TEST(Codifferent, NamedElementsAgainstDescriptors)
{
    for (long a = 2; a <= 5; ++a) {
        for (long b = a + 2; b <= a + 6; ++b) {
            const auto p = OrderParams::thomas(a, b);
            for (const auto& d : closed_form_indecomposables(p)) {
                const auto x = descriptor_to_element(d);
                EXPECT_EQ(pairing_trace(delta_v(p), x), b - a + 1 - d.v);
                EXPECT_EQ(pairing_trace(delta_w(p), x), d.w - a * d.v + 1);
            }
        }
    }
}

TEST(Codifferent, DeltaTFamily)
{
    const auto p = OrderParams::thomas(3, 6);
    EXPECT_EQ(delta_t(p, 1, 0, 0, 0, 0).num, OrderElement(p, -3, 1, 0));
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> k(-9, 9);
    for (const auto& d : closed_form_indecomposables(p)) {
        for (int i = 0; i < 10; ++i) {
            const Integer t(k(rng));
            const auto delta = delta_t(p, t, d.v, d.w, Integer(k(rng)), Integer(k(rng)));
            EXPECT_EQ(pairing_trace(delta, descriptor_to_element(d)), t);
        }
    }
    EXPECT_THROW(delta_t(p, 1, 0, 9, 0, 0), DescriptorError);
}

TEST(Codifferent, NamedElementsAreThomasOnly)
{
    EXPECT_THROW(delta_v(OrderParams::ennola(3)), UnsupportedFamilyError);
    EXPECT_THROW(delta_w(OrderParams::simplest(2)), UnsupportedFamilyError);
}

TEST(MinTrace, Examples)
{
    const auto t = OrderParams::thomas(2, 4);
    EXPECT_EQ(min_trace(OrderElement::rho(t), 3), 1);
    const auto e = OrderParams::ennola(3);
    EXPECT_EQ(min_trace(OrderElement(e, 1, 1, 1), 3), 2);
    const auto big = OrderParams::thomas(4, 8);
    EXPECT_EQ(min_trace(descriptor_to_element(IndecDescriptor::vw(big, 0, 3)), 6), 4);
}

TEST(MinTrace, WitnessAttainsTheValue)
{
    const auto p = OrderParams::thomas(3, 6);
    for (const auto& d : closed_form_indecomposables(p)) {
        const auto x = descriptor_to_element(d);
        const auto m = min_trace_with_witness(x, 5);
        EXPECT_TRUE(is_totally_positive_codiff(m.witness));
        EXPECT_EQ(pairing_trace(m.witness, x), m.value);
    }
}

TEST(MinTrace, Errors)
{
    const auto e = OrderParams::ennola(3);
    EXPECT_THROW(min_trace(OrderElement(e, 1, 1, 1), 1), NotFoundError);
    EXPECT_THROW(min_trace(OrderElement(e, -1, 0, 0), 3), PreconditionError);
    EXPECT_THROW(min_trace(OrderElement::one(e), 0), std::invalid_argument);
}

TEST(MinTrace, SimplestPattern)
{
    // a with a^2+3a+9 squarefree: 1 for every class except 1+rho+rho^2, which has 2.
    for (long a : {-1L, 1L, 2L, 4L, 7L}) {
        const auto p = OrderParams::simplest(a);
        for (const auto& d : closed_form_indecomposables(p)) {
            const std::int64_t expected = d.kind == DescriptorKind::OnePlusRhoPlusRhoSq ? 2 : 1;
            EXPECT_EQ(min_trace(descriptor_to_element(d), 3), expected) << p.describe() << " " << d.label();
        }
    }
}

TEST(MinTrace, EnnolaIsTwo)
{
    for (long a = 3; a <= 7; ++a) {
        const auto p = OrderParams::ennola(a);
        for (const auto& d : closed_form_indecomposables(p)) {
            if (d.kind == DescriptorKind::One) continue;
            EXPECT_EQ(min_trace(descriptor_to_element(d), 3), 2) << p.describe() << " " << d.label();
        }
    }
}

TEST(MinTrace, ScalesWithElement)
{
    // min over delta of Tr(n alpha delta) is n times the value for alpha.
    const auto p = OrderParams::thomas(2, 5);
    const auto x = descriptor_to_element(IndecDescriptor::vw(p, 0, 1));
    EXPECT_EQ(min_trace(OrderElement::from_integer(p, 3) * x, 10), 3 * min_trace(x, 5));
}
