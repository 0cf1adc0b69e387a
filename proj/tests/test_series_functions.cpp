#include <gtest/gtest.h>

#include <lagrange_kit/series_functions.hpp>

#include "support.hpp"

using namespace lagrange_kit;
using namespace test_support;

namespace
{

PS exp_series(int order)
{
    return exp(PS::x(order));
}

PS catalan_series(int order)
{
    std::vector<Rational> c;
    for (int n = 0; n < order; ++n) {
        c.emplace_back(binomial(2 * n, n) / (n + 1));
    }
    return PS(c, order);
}

} // namespace

TEST(SeriesFunctions, ExpLogRoundTrip)
{
    const TruncationContext<Rational> ctx(12);
    const PS one_plus_x = ctx.series({1, 1});
    EXPECT_EQ(exp(log(one_plus_x)), one_plus_x);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const PS a = random_series(rng, 12, 1);
        EXPECT_EQ(log(exp(a)), a);
    }
}

TEST(SeriesFunctions, DomainErrors)
{
    const TruncationContext<Rational> ctx(5);
    EXPECT_THROW(exp(ctx.one()), BadConstantTerm);
    EXPECT_THROW(log(ctx.series({2, 1})), BadConstantTerm);
    EXPECT_THROW(pow(ctx.series({2, 1}), Rational(1, 2)), BadConstantTerm);
}

TEST(SeriesFunctions, NegativePowerOfBinomial)
{
    const PS p = pow(PS({1, 1}, 8), -1L);
    for (int n = 0; n < 8; ++n) {
        EXPECT_EQ(p[n], Rational(n % 2 == 0 ? 1 : -1));
    }
}

TEST(SeriesFunctions, RationalPowerMatchesBinomialComposition)
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational e = small_rational(rng, 5);
        const PS h = random_series(rng, 10, 1);
        std::vector<Rational> binom;
        for (int k = 0; k < 10; ++k) {
            binom.push_back(binomial(e, k));
        }
        std::vector<Rational> c = h.coefficients();
        c[0] = Rational(1);
        EXPECT_EQ(pow(PS(c, 10), e), compose(PS(binom, 10), h));
    }
}

TEST(SeriesFunctions, SquareRootGivesCatalan)
{
    // (1 - sqrt(1 - 4x)) / (2x)
    const int n = 16;
    const PS root = pow(PS({1, -4}, n + 1), Rational(1, 2));
    const PS c = (PS::one(n + 1) - root).shifted_down(1) * Rational(1, 2);
    EXPECT_EQ(c, catalan_series(n));
    EXPECT_EQ(c, PS::one(n) + PS::x(n) * c * c);
}

TEST(SeriesFunctions, ComposeIdentityAndGeometric)
{
    std::mt19937_64 rng(33);
    const PS f = random_series(rng, 10);
    EXPECT_EQ(compose(f, PS::x(10)), f);
    EXPECT_EQ(compose(PS(std::vector<Rational>(10, Rational(1)), 10), PS::x(10)), PS::one(10) / PS({1, -1}, 10));
    EXPECT_THROW(compose(f, PS::one(10)), InadmissibleComposition);
}

TEST(SeriesFunctions, TreeFunctionInvertsXExpMinusX)
{
    const int n = 15;
    std::vector<Rational> t(n);
    for (int k = 1; k < n; ++k) {
        t[k] = Rational(pow(Rational(k), k - 1) / Rational(factorial(k)));
    }
    const PS tree(t, n);
    const PS inner = PS::x(n) * exp(-PS::x(n));
    EXPECT_EQ(compose(tree, inner), PS::x(n));
    EXPECT_EQ(reversion(inner), tree);
}

TEST(SeriesFunctions, ReversionExamples)
{
    EXPECT_EQ(reversion(PS::x(9)), PS::x(9));
    const PS g = reversion(PS({0, 1, -1}, 9));
    EXPECT_EQ(g, catalan_series(8).shifted_up(1));
    EXPECT_THROW(reversion(PS({1, 1}, 4)), NotReversible);
    EXPECT_THROW(reversion(PS({0, 0, 1}, 4)), NotReversible);
}

TEST(SeriesFunctions, ReversionRoundTrip)
{
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 25; ++trial) {
        const PS f = random_reversible(rng, 10, 9, false);
        const PS g = reversion(f);
        EXPECT_EQ(compose(g, f), PS::x(10));
        EXPECT_EQ(compose(f, g), PS::x(10));
    }
}

TEST(SeriesFunctions, ComposeValuationTwo)
{
    // exp(x^2) through x^9 needs only five outer terms.
    const PS e = compose(exp_series(5), PS::monomial(Rational(1), 2, 10));
    EXPECT_EQ(e.order(), 10);
    EXPECT_EQ(e[8], Rational(1, 24));
}

TEST(SeriesFunctions, PolynomialOuterAcceptsAnyInner)
{
    const std::vector<Rational> poly{1, 2, 1};
    const PS r = compose_polynomial<Rational>(poly, PS({1, 1}, 4));
    EXPECT_EQ(r, PS({4, 4, 1, 0}, 4));
}

TEST(SeriesFunctions, LaurentComposeInvertsBack)
{
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 15; ++trial) {
        const LS a = random_laurent(rng, -3, 5, 12);
        const PS g = random_reversible(rng, 16, 6, false);
        const LS b = compose(a, g);
        const LS back = compose(b, reversion(g));
        EXPECT_EQ(back, a.truncated(back.order()));
        EXPECT_GE(back.order(), 6);
    }
}

TEST(SeriesFunctions, ResidueChangeOfVariables)
{
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 30; ++trial) {
        const LS a = random_laurent(rng, -4, 6, 15);
        const PS g = random_reversible(rng, 15, 14, false);
        const LS pulled = compose(a, g) * LS(g.derivative());
        EXPECT_EQ(residue(pulled), residue(a));
    }
}

TEST(SeriesFunctions, LogarithmicDerivativeHasResidueOne)
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const LS g(random_reversible(rng, 12, 11, false));
        EXPECT_EQ(residue(g.derivative() / g), Rational(1));
    }
}

TEST(SeriesFunctions, HirzebruchResidues)
{
    // f = x / (1 - e^{-x}), so (f/x)^n = (1 - e^{-x})^{-n}.
    const int order = 24;
    const LS denominator(PS::one(order) - exp(-PS::x(order)));
    for (int n = 1; n <= 20; ++n) {
        EXPECT_EQ(residue(denominator.pow(-n)), Rational(1)) << n;
    }
}
