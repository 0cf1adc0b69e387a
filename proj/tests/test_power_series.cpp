#include <gtest/gtest.h>

#include "support.hpp"

using namespace lagrange_kit;
using namespace test_support;

TEST(PowerSeries, ProductOfBinomials)
{
    const TruncationContext<Rational> ctx(5);
    const PS p = ctx.series({1, 1}) * ctx.series({1, -1});
    EXPECT_EQ(p, ctx.series({1, 0, -1}));
    EXPECT_EQ(p.order(), 5);
}

TEST(PowerSeries, GeometricSeries)
{
    const TruncationContext<Rational> ctx(8);
    const PS g = ctx.one() / ctx.series({1, -1});
    for (int n = 0; n < 8; ++n) {
        EXPECT_EQ(g[n], Rational(1));
    }
}

TEST(PowerSeries, MixingOrdersIsAnError)
{
    EXPECT_THROW(PS::one(4) + PS::one(5), TruncationMismatch);
    EXPECT_THROW(PS::one(4) * PS::one(5), TruncationMismatch);
}

TEST(PowerSeries, DivisionByNonUnit)
{
    const TruncationContext<Rational> ctx(6);
    EXPECT_THROW(ctx.one() / ctx.x(), DivisionByNonUnit);
}

TEST(PowerSeries, CoefficientBeyondOrder)
{
    const PS a = PS::one(3);
    EXPECT_EQ(a.coeff(-1), Rational(0));
    EXPECT_THROW(a.coeff(3), OutOfPrecision);
}

TEST(PowerSeries, Calculus)
{
    const TruncationContext<Rational> ctx(6);
    EXPECT_EQ(ctx.monomial(Rational(1), 3).derivative(), PS({0, 0, 3, 0, 0}, 5));
    EXPECT_EQ(ctx.series({1, 2}).integral(), PS({0, 1, 1, 0, 0, 0, 0}, 7));
    EXPECT_EQ(ctx.series({1, 2}).integral().derivative(), ctx.series({1, 2}));
}

TEST(PowerSeries, RingAxiomsAtOrderTwenty)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const PS a = random_series(rng, 20), b = random_series(rng, 20), c = random_series(rng, 20);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, PS::zero(20));
    }
}

TEST(PowerSeries, DivisionInverts)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const PS a = random_series(rng, 15);
        std::vector<Rational> bc = random_series(rng, 15).coefficients();
        bc[0] = nonzero_rational(rng);
        const PS b(bc, 15);
        EXPECT_EQ((a / b) * b, a);
    }
}

TEST(PowerSeries, ShiftsAndValuation)
{
    const TruncationContext<Rational> ctx(6);
    const PS a = ctx.series({0, 0, 3, 1});
    EXPECT_EQ(a.valuation(), 2);
    EXPECT_EQ(a.shifted_down(2), PS({3, 1, 0, 0}, 4));
    EXPECT_EQ(a.shifted_down(2).shifted_up(2), a);
    EXPECT_THROW(a.shifted_down(3), DivisionByNonUnit);
    EXPECT_TRUE(ctx.zero().is_zero());
}

TEST(TruncationContext, RejectsEmptyOrder)
{
    EXPECT_THROW(TruncationContext<Rational>(0), InvalidArgument);
}
