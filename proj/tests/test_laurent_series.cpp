#include <gtest/gtest.h>

#include "support.hpp"

using namespace lagrange_kit;
using namespace test_support;

TEST(LaurentSeries, CanonicalForm)
{
    const LS a(-2, {0, 0, 5}, 4);
    EXPECT_EQ(a.min_exponent(), 0);
    EXPECT_EQ(a.coeff(0), Rational(5));
    const LS z(-2, {0, 0}, 4);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.min_exponent(), 4);
}

TEST(LaurentSeries, QuotientShiftsMinExponent)
{
    // x / (x - x^2) = 1 + x + x^2 + ...
    const LS num(1, {1}, 10);
    const LS den(1, {1, -1}, 10);
    const LS q = num / den;
    EXPECT_EQ(q.min_exponent(), 0);
    for (int n = 0; n < q.order(); ++n) {
        EXPECT_EQ(q.coeff(n), Rational(1));
    }
    EXPECT_EQ(q.order(), 9);
}

TEST(LaurentSeries, PrecisionTracking)
{
    const LS a = LS::monomial(Rational(1), -2, 10);
    const LS b(PS::one(6));
    EXPECT_EQ((a * b).order(), 4);
    EXPECT_EQ((a + b).order(), 6);
    EXPECT_THROW((a * b).coeff(4), OutOfPrecision);
}

TEST(LaurentSeries, ResidueOfInverse)
{
    EXPECT_EQ(LS::monomial(Rational(1), -1, 5).residue(), Rational(1));
    EXPECT_EQ(LS(1, {1, 3, 2}, 8).inverse().residue(), Rational(1));
}

TEST(LaurentSeries, DerivativeKillsResidue)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const LS a = random_laurent(rng, -5, 4, 8);
        const LS d = a.derivative();
        EXPECT_EQ(d.residue(), Rational(0));
        EXPECT_EQ(d.integral() + LS::monomial(a.coeff(0), 0, 8), a.truncated(8));
    }
}

TEST(LaurentSeries, IntegralRejectsResidue)
{
    EXPECT_THROW(LS::monomial(Rational(2), -1, 3).integral(), NonIntegrableResidue);
}

TEST(LaurentSeries, DivisionByZeroSeries)
{
    EXPECT_THROW(LS::zero(5).inverse(), DivisionByZeroSeries);
}

TEST(LaurentSeries, PowersAndInverses)
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const LS a = random_laurent(rng, -2, 3, 10);
        const LS p = a.pow(3);
        EXPECT_EQ(p, a * a * a);
        const LS unit = a * a.inverse();
        EXPECT_EQ(unit.min_exponent(), 0);
        EXPECT_EQ(unit.coeff(0), Rational(1));
        for (int n = 1; n < unit.order(); ++n) {
            EXPECT_EQ(unit.coeff(n), Rational(0));
        }
        EXPECT_EQ(a.pow(-2) * a.pow(2), LS::monomial(Rational(1), 0, a.pow(-2).order() + 2 * a.min_exponent()));
    }
}

TEST(LaurentSeries, CanonicalAfterOperations)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const LS a = random_laurent(rng, -3, 2, 6), b = random_laurent(rng, -3, 2, 6);
        for (const LS &r : {a + b, a - b, a * b, a - a, a.derivative()}) {
            if (!r.is_zero()) {
                EXPECT_FALSE(r.coefficients().front().is_zero());
            } else {
                EXPECT_EQ(r.min_exponent(), r.order());
            }
        }
    }
}

TEST(LaurentSeries, PowerSeriesPart)
{
    EXPECT_EQ(LS(PS({1, 2, 3}, 3)).to_power_series(), PS({1, 2, 3}, 3));
    EXPECT_THROW(LS::monomial(Rational(1), -1, 3).to_power_series(), NotAPowerSeries);
}
