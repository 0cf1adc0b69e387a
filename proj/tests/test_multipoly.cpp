#include <gtest/gtest.h>

#include <random>

#include <lagrange_kit/multipoly.hpp>

using namespace lagrange_kit;

TEST(MultiPoly, NoStoredZeros)
{
    const auto g = MultiPoly::generators({"x", "y"});
    const MultiPoly p = g[0] + g[1] - g[0];
    EXPECT_EQ(p, g[1]);
    EXPECT_EQ(p.term_count(), 1u);
    EXPECT_TRUE((g[0] - g[0]).is_zero());
}

TEST(MultiPoly, AlignsVariableLists)
{
    const MultiPoly x = MultiPoly::variable("x");
    const MultiPoly y = MultiPoly::variable("y");
    const MultiPoly p = (x + y) * (x - y);
    EXPECT_EQ(p, x * x - y * y);
    EXPECT_EQ(p.coefficient({{"y", 2}}), Rational(-1));
    EXPECT_EQ(p.total_degree(), 2);
    EXPECT_EQ(p.degree_in("x"), 2);
    EXPECT_EQ((x + Rational(1)) * Rational(3), x * Rational(3) + Rational(3));
}

TEST(MultiPoly, MatchesDenseEvaluation)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
    const auto g = MultiPoly::generators({"a", "b", "c"});
    auto random_poly = [&] {
        MultiPoly p;
        for (int t = 0; t < 4; ++t) {
            MultiPoly m(Rational(coef(rng)));
            for (const auto &v : g) {
                for (int e = expo(rng); e > 0; --e) {
                    m = m * v;
                }
            }
            p += m;
        }
        return p;
    };
    for (int trial = 0; trial < 30; ++trial) {
        const MultiPoly p = random_poly(), q = random_poly();
        const std::map<std::string, Rational> at{{"a", Rational(2)}, {"b", Rational(-1, 3)}, {"c", Rational(5)}};
        EXPECT_EQ((p * q).evaluate(at), p.evaluate(at) * q.evaluate(at));
        EXPECT_EQ((p + q).evaluate(at), p.evaluate(at) + q.evaluate(at));
    }
}

TEST(MultiPoly, TruncationAndSubstitution)
{
    const auto g = MultiPoly::generators({"x", "y"});
    const MultiPoly p = Rational(1) + g[0] + g[0] * g[1] + g[0] * g[0] * g[0];
    EXPECT_EQ(p.truncated(1), Rational(1) + g[0]);
    EXPECT_EQ(p.truncated_each(1), Rational(1) + g[0] + g[0] * g[1]);
    EXPECT_EQ(p.substitute("x", Rational(2)), Rational(11) + g[1] * Rational(2));
    EXPECT_EQ(MultiPoly::multiply(p, p, 2), (p * p).truncated(2));
}

TEST(MultiPoly, UnitsAreNonzeroConstants)
{
    EXPECT_TRUE(MultiPoly(Rational(3)).is_unit());
    EXPECT_EQ(MultiPoly(Rational(3)).inverse(), MultiPoly(Rational(1, 3)));
    EXPECT_FALSE(MultiPoly::variable("x").is_unit());
    EXPECT_THROW(MultiPoly::variable("x").inverse(), DivisionByNonUnit);
}

TEST(MultiPoly, Formatting)
{
    const MultiPoly x = MultiPoly::variable("x");
    EXPECT_EQ((Rational(1) - x * Rational(2)).to_string(), "1 - 2*x");
    EXPECT_EQ(MultiPoly().to_string(), "0");
}
