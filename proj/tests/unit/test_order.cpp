#include "indec/order.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace indec;
using indec::testing::random_element;
using indec::testing::sample_orders;

TEST(MinimalPoly, FamiliesMatchTheirDefinitions)
{
    EXPECT_EQ(minimal_poly(Family::SimplestCubic, 1), (MinimalPoly{Integer(-1), Integer(-4), Integer(-1)}));
    EXPECT_EQ(minimal_poly(Family::Ennola, 3), (MinimalPoly{Integer(-1), Integer(-3), Integer(2)}));
    EXPECT_EQ(minimal_poly(Family::Thomas, 2, 4), (MinimalPoly{Integer(-1), Integer(8), Integer(-6)}));
}

TEST(MinimalPoly, DiscriminantIsPositiveForTotallyRealFamilies)
{
    for (const auto& p : sample_orders()) EXPECT_GT(p.minimal_poly().discriminant(), 0) << p.describe();
    // Simplest cubic discriminant is (a^2+3a+9)^2.
    EXPECT_EQ(OrderParams::simplest(4).minimal_poly().discriminant(), 37 * 37);
}

TEST(OrderParams, RejectsOutOfRangeParameters)
{
    EXPECT_THROW(OrderParams::simplest(-2), ParameterError);
    EXPECT_THROW(OrderParams::ennola(2), ParameterError);
    EXPECT_THROW(OrderParams::thomas(2, 3), ParameterError);
    EXPECT_THROW(OrderParams::thomas(1, 4), ParameterError);
    EXPECT_NO_THROW(OrderParams::simplest(-1));
    EXPECT_NO_THROW(OrderParams::thomas(2, 4));
}

TEST(OrderParams, ParseFamily)
{
    EXPECT_EQ(parse_family("Thomas"), Family::Thomas);
    EXPECT_EQ(parse_family("simplest"), Family::SimplestCubic);
    EXPECT_EQ(parse_family("ENNOLA"), Family::Ennola);
    EXPECT_FALSE(parse_family("shanks").has_value());
}

TEST(OrderParams, RationalRootDetection)
{
    EXPECT_TRUE(has_rational_root({Integer(-1), Integer(0), Integer(0)}));  // x^3 - 1
    EXPECT_TRUE(has_rational_root({Integer(-6), Integer(11), Integer(-6)})); // (x-1)(x-2)(x-3)
    EXPECT_FALSE(has_rational_root(OrderParams::thomas(2, 4).minimal_poly()));
}

TEST(OrderElement, Addition)
{
    const auto p = OrderParams::thomas(2, 4);
    EXPECT_EQ(OrderElement(p, 1, 0, 0) + OrderElement(p, 1, 0, 0), OrderElement(p, 2, 0, 0));
    EXPECT_EQ(OrderElement(p, 0, 1, 0) + OrderElement(p, 0, 0, 1), OrderElement(p, 0, 1, 1));
    const OrderElement x(p, 3, -7, 11);
    EXPECT_TRUE(add(x, neg(x)).is_zero());
}

TEST(OrderElement, MultiplicationReducesByTheMinimalPolynomial)
{
    const auto p = OrderParams::thomas(2, 4);
    const auto rho = OrderElement::rho(p);
    EXPECT_EQ(mul(rho, rho * rho), OrderElement(p, 1, -8, 6));
    const OrderElement x(p, 4, -2, 9);
    EXPECT_EQ(mul(OrderElement::one(p), x), x);
    EXPECT_EQ(pow(rho, 3), OrderElement(p, 1, -8, 6));
    EXPECT_EQ(pow(x, 0), OrderElement::one(p));
}

TEST(OrderElement, ThomasUnitProduct)
{
    for (long a = 2; a <= 6; ++a) {
        for (long b = a + 2; b <= a + 6; ++b) {
            const auto p = OrderParams::thomas(a, b);
            const auto rho = OrderElement::rho(p);
            const auto shifted = rho - OrderElement::from_integer(p, Integer(a));
            EXPECT_EQ(rho * (shifted * shifted), OrderElement(p, 1, a * a - a * b, b - a)) << p.describe();
        }
    }
}

TEST(OrderElement, MixingOrdersThrows)
{
    const OrderElement x = OrderElement::rho(OrderParams::thomas(2, 4));
    const OrderElement y = OrderElement::rho(OrderParams::thomas(2, 5));
    EXPECT_THROW(x + y, IncompatibleOrderError);
    EXPECT_THROW(x * y, IncompatibleOrderError);
    EXPECT_THROW(lex_less(x, y), IncompatibleOrderError);
}

TEST(OrderElement, TotalPositivityExamples)
{
    const auto p = OrderParams::thomas(3, 6);
    const auto rho = OrderElement::rho(p);
    const auto shifted = rho - OrderElement::from_integer(p, 3);
    EXPECT_TRUE(is_totally_positive(OrderElement::one(p)));
    EXPECT_TRUE(is_totally_positive(rho));
    EXPECT_FALSE(is_totally_positive(shifted));
    EXPECT_TRUE(is_totally_positive(shifted * shifted));
    EXPECT_FALSE(is_totally_positive(OrderElement::zero(p)));
}

TEST(OrderElement, UnitExamples)
{
    const auto t = OrderParams::thomas(2, 4);
    const auto rho = OrderElement::rho(t);
    const auto shifted = rho - OrderElement::from_integer(t, 2);
    EXPECT_TRUE(is_unit(rho));
    EXPECT_TRUE(is_unit(shifted * shifted));
    const auto s = OrderParams::simplest(1);
    const OrderElement x(s, 1, 1, 1);
    EXPECT_EQ(norm(x), 13);
    EXPECT_FALSE(is_unit(x));
}

TEST(OrderElement, NormMatchesSylvesterResultant)
{
    std::mt19937_64 rng(7);
    for (const auto& p : sample_orders()) {
        for (int i = 0; i < 200; ++i) {
            const auto x = random_element(p, rng, 25);
            EXPECT_EQ(norm(x), indec::testing::sylvester_norm(x)) << p.describe() << " " << x.to_string();
        }
        EXPECT_EQ(norm(OrderElement(p, 5, 0, 0)), indec::testing::sylvester_norm(OrderElement(p, 5, 0, 0)));
        EXPECT_EQ(norm(OrderElement(p, 2, 3, 0)), indec::testing::sylvester_norm(OrderElement(p, 2, 3, 0)));
    }
}

TEST(OrderElement, TraceMatchesNewtonSums)
{
    std::mt19937_64 rng(8);
    for (const auto& p : sample_orders()) {
        for (int i = 0; i < 200; ++i) {
            const auto x = random_element(p, rng, 25);
            EXPECT_EQ(trace(x), indec::testing::newton_trace(x));
        }
    }
}

TEST(OrderElement, NormIsMultiplicativeAndTraceAdditive)
{
    std::mt19937_64 rng(9);
    for (const auto& p : sample_orders()) {
        for (int i = 0; i < 200; ++i) {
            const auto x = random_element(p, rng, 30);
            const auto y = random_element(p, rng, 30);
            EXPECT_EQ(norm(x * y), norm(x) * norm(y));
            EXPECT_EQ(trace(x + y), trace(x) + trace(y));
            EXPECT_EQ(x * y, y * x);
        }
    }
}

TEST(OrderElement, CharPolyOfRhoIsTheMinimalPolynomial)
{
    for (const auto& p : sample_orders()) {
        const CharPoly cp = char_poly(OrderElement::rho(p));
        const MinimalPoly& f = p.minimal_poly();
        EXPECT_EQ(cp.e1, -f.c2);
        EXPECT_EQ(cp.e2, f.c1);
        EXPECT_EQ(cp.e3, -f.c0);
        EXPECT_EQ(cp.discriminant(), f.discriminant());
    }
}

TEST(OrderElement, ExactQuotientAndInverse)
{
    std::mt19937_64 rng(10);
    for (const auto& p : sample_orders()) {
        for (int i = 0; i < 50; ++i) {
            const auto x = random_element(p, rng, 15);
            const auto y = random_element(p, rng, 15);
            if (y.is_zero()) continue;
            const auto q = exact_quotient(x * y, y);
            ASSERT_TRUE(q.has_value());
            EXPECT_EQ(*q, x);
        }
        const auto rho = OrderElement::rho(p);
        EXPECT_EQ(inverse_unit(rho) * rho, OrderElement::one(p));
        EXPECT_FALSE(exact_quotient(OrderElement::one(p), OrderElement::from_integer(p, 2)).has_value());
        EXPECT_THROW(inverse_unit(OrderElement::from_integer(p, 2)), std::domain_error);
        EXPECT_THROW(exact_quotient(rho, OrderElement::zero(p)), std::domain_error);
    }
}

TEST(Galois, IdentityOnIntegersAndOrderThree)
{
    std::mt19937_64 rng(11);
    for (long a = -1; a <= 8; ++a) {
        const auto p = OrderParams::simplest(a);
        EXPECT_EQ(galois_conjugate(OrderElement::one(p)), OrderElement::one(p));
        for (int i = 0; i < 50; ++i) {
            const auto x = random_element(p, rng, 20);
            EXPECT_EQ(galois_conjugate(galois_conjugate(galois_conjugate(x))), x);
            EXPECT_EQ(char_poly(galois_conjugate(x)), char_poly(x));
        }
    }
}

TEST(Galois, RingHomomorphism)
{
    std::mt19937_64 rng(12);
    for (long a = -1; a <= 8; ++a) {
        const auto p = OrderParams::simplest(a);
        const auto s = galois_conjugate(OrderElement::rho(p));
        EXPECT_TRUE((s * s * s + Integer(-a) * (s * s) + Integer(-(a + 3)) * s - OrderElement::one(p)).is_zero());
        EXPECT_FALSE(s == OrderElement::rho(p));
        for (int i = 0; i < 50; ++i) {
            const auto x = random_element(p, rng, 20);
            const auto y = random_element(p, rng, 20);
            EXPECT_EQ(galois_conjugate(x * y), galois_conjugate(x) * galois_conjugate(y));
            EXPECT_EQ(galois_conjugate(x + y), galois_conjugate(x) + galois_conjugate(y));
        }
    }
}

TEST(Galois, OtherFamiliesUnsupported)
{
    EXPECT_THROW(galois_conjugate(OrderElement::rho(OrderParams::ennola(3))), UnsupportedFamilyError);
    EXPECT_THROW(galois_conjugate(OrderElement::rho(OrderParams::thomas(2, 4))), UnsupportedFamilyError);
}

TEST(RationalArithmetic, InverseAndProduct)
{
    std::mt19937_64 rng(13);
    for (const auto& p : sample_orders()) {
        for (int i = 0; i < 30; ++i) {
            const auto x = random_element(p, rng, 10);
            if (x.is_zero()) continue;
            const auto xr = to_rational(x.coords());
            const auto prod = mul(p, xr, inverse(p, xr));
            EXPECT_EQ(prod[0], 1);
            EXPECT_EQ(prod[1], 0);
            EXPECT_EQ(prod[2], 0);
            const auto cp = char_poly(p, xr);
            EXPECT_EQ(cp[2], norm(x));
        }
        EXPECT_THROW(inverse(p, RationalCoords{}), std::domain_error);
    }
}

TEST(OrderElement, RhoSquaredIsATotallyPositiveUnitEverywhere)
{
    for (const auto& p : sample_orders()) {
        const auto rho = OrderElement::rho(p);
        EXPECT_EQ(norm(rho), 1);
        EXPECT_TRUE(is_totally_positive(rho * rho)) << p.describe();
    }
    EXPECT_FALSE(is_totally_positive(OrderElement::rho(OrderParams::ennola(4))));
}
