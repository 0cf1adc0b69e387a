#include <gtest/gtest.h>

#include <lagrange_kit/identities/registry.hpp>
#include <lagrange_kit/literal.hpp>
#include <lagrange_kit/serialization.hpp>

#include "support.hpp"

using namespace lagrange_kit;

TEST(Literal, CoefficientList)
{
    const auto c = parse_coefficient_list("1, -2/4,3");
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[1], Rational(-1, 2));
    EXPECT_EQ(c[2], Rational(3));
}

TEST(Literal, ErrorPositions)
{
    auto position = [](const char *text) -> long {
        try {
            parse_coefficient_list(text);
        } catch (const ParseError &e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    EXPECT_EQ(position("1,2/x"), 4);
    EXPECT_EQ(position("1,,2"), 2);
    EXPECT_EQ(position("1,2/0"), 4);
    EXPECT_EQ(position(""), 0);
    EXPECT_EQ(position("1,2 3"), 4);
}

TEST(Literal, Presets)
{
    const auto e = parse_series_literal("exp", 6);
    EXPECT_EQ(e[5], Rational(1, 120));
    const auto g = parse_series_literal("geom", 4);
    EXPECT_EQ(g, PowerSeries<Rational>(std::vector<Rational>(4, Rational(1))));
    const auto q = parse_series_literal("one-plus-t-squared", 5);
    EXPECT_EQ(q, PowerSeries<Rational>({Rational(1), Rational(2), Rational(1)}, 5));
    EXPECT_THROW(parse_series_literal("cos", 5), ParseError);
}

TEST(Serialization, SeriesRoundTrip)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_laurent(rng, -3, 4, 10);
        const auto j = to_json(s);
        EXPECT_EQ(laurent_from_json(nlohmann::json::parse(j.dump())), s);
    }
    const auto j = to_json(PowerSeries<Rational>({Rational(1, 2), Rational(0), Rational(-3)}, 3));
    EXPECT_EQ(j.dump(), R"({"coefficients":["1/2","0","-3"],"min_exponent":0,"order":3})");
}

TEST(Serialization, MultiPolyRoundTrip)
{
    const auto x = MultiPoly::variable("x");
    const auto y = MultiPoly::variable("y");
    const MultiPoly p = x * x * y * Rational(3, 4) - y + MultiPoly(Rational(2));
    EXPECT_EQ(multipoly_from_json(nlohmann::json::parse(to_json(p).dump())), p);
    EXPECT_THROW(multipoly_from_json(nlohmann::json::parse(R"({"variables":["x"]})")), ParseError);
}

TEST(Serialization, ReportShape)
{
    const auto r = run_identity("lacasse", IdentityParams{}, 8);
    const auto j = to_json(r);
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("identity"), "lacasse");
    EXPECT_EQ(j.at("status"), "pass");
    EXPECT_TRUE(j.at("first_failure").is_null());
    EXPECT_FALSE(j.contains("elapsed_ms"));
}

TEST(Serialization, CsvQuoting)
{
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}
