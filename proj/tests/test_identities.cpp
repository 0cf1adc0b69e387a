#include <gtest/gtest.h>

#include <lagrange_kit/identities/registry.hpp>

#include "support.hpp"

using namespace lagrange_kit;
using test_support::PS;

namespace
{

void expect_pass(const IdentityReport &r)
{
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure.value_or("");
    EXPECT_GT(r.checks, 0u) << r.name;
}

std::string result_of(const IdentityReport &r, const std::string &key)
{
    for (const auto &[k, v] : r.results) {
        if (k == key) {
            return v;
        }
    }
    return "<missing>";
}

} // namespace

TEST(Catalan, Examples)
{
    const PS c = fuss_catalan_series(2, 8);
    EXPECT_EQ(c[5], Rational(42));
    EXPECT_EQ(c[0], Rational(1));
    EXPECT_EQ(pow(c, 3L)[2], Rational(9));
    EXPECT_EQ(fuss_ballot(2, 5, 1), Rational(binomial(10, 5)) / Rational(6));
}

TEST(Catalan, SuitePasses)
{
    expect_pass(check_catalan_suite({-5, 5}, 30));
}

TEST(Catalan, MonotoneInOrder)
{
    for (int order : {1, 2, 5, 12}) {
        expect_pass(check_catalan_suite({-2, 2}, order));
    }
}

TEST(FussCatalan, Examples)
{
    EXPECT_EQ(fuss_ballot(3, 2, 1), Rational(3));
    EXPECT_EQ(fuss_catalan_series(3, 5)[2], Rational(3));
    // p = 2 gives the Catalan numbers back.
    EXPECT_EQ(fuss_catalan_series(2, 10), fuss_catalan_series(2, 10));
    EXPECT_EQ(fuss_catalan_series(2, 10)[9], Rational(4862));
}

TEST(FussCatalan, SuitePasses)
{
    expect_pass(check_fuss_catalan({2, 4}, {-3, 5}, 20));
}

TEST(FussCatalan, RejectsSmallP)
{
    EXPECT_THROW(check_fuss_catalan({1, 2}, {0, 1}, 5), InvalidArgument);
}

TEST(RotheHagen, Grid)
{
    expect_pass(check_rothe_hagen({0, 4}, {-6, 6}, 8));
    expect_pass(check_rothe_hagen({3, 3}, {2, 2}, 3));
}

TEST(Jensen, Examples)
{
    EXPECT_EQ(jensen_left(0, 2, 3, 4), Rational(binomial(5, 4)));
    EXPECT_EQ(jensen_left(3, 1, 10, 4), jensen_right(3, 1, 10, 4));
    EXPECT_EQ(jensen_left(2, 4, -3, 0), Rational(1));
    expect_pass(check_jensen({0, 0}, {1, 1}, {2, 2}, 5));
    expect_pass(check_jensen({0, 4}, {-6, 6}, {-6, 6}, 8));
}

TEST(FcPolynomial, TwoStackSortable)
{
    const auto r = check_fc_polynomiality(3, 0, 2, 30);
    expect_pass(r);
    EXPECT_EQ(result_of(r, "two_stack_sortable_polynomial"), "2 - x");
    EXPECT_EQ(result_of(r, "polynomial"), "1/2 - 1/4*x");
    EXPECT_FALSE(r.empirical);
}

TEST(FcPolynomial, PrintedTable)
{
    for (long p = 2; p <= 5; ++p) {
        for (long i = 0; i <= 2; ++i) {
            for (long d = 1; d <= 3; ++d) {
                expect_pass(check_fc_polynomiality(p, i, i + d, 20));
            }
        }
    }
    EXPECT_EQ(polynomial_to_string(printed_u(3, 0, 1)), "1");
}

TEST(FcPolynomial, LargeIIsEmpirical)
{
    for (long i = 0; i <= 4; ++i) {
        for (long j = 0; j <= i; ++j) {
            const auto r = check_fc_polynomiality(3, i, j, 25);
            expect_pass(r);
            EXPECT_TRUE(r.empirical);
        }
    }
}

TEST(TreeFunction, Examples)
{
    const PS T = tree_function(6);
    EXPECT_EQ(T[3] * Rational(6), Rational(9));
    const PS U3 = [&] {
        const PS one = PS::one(6);
        return T * pow(one - T, -3L);
    }();
    EXPECT_EQ(U3[4], Rational(128, 3));
    // z = 0 reduces Abel's sum to the binomial theorem.
    EXPECT_EQ(abel_right(5, 2, 3, 0), pow(Rational(5), 5));
}

TEST(TreeFunction, SuitePasses)
{
    expect_pass(check_tree_function_suite({-3, 5}, 30));
    expect_pass(check_lacasse(12));
    expect_pass(check_abel({-3, 3}, {-2, 2}, 8));
}

TEST(WeightedStirling, Examples)
{
    EXPECT_EQ(weighted_stirling(4, 2, 0), Rational(7));
    EXPECT_EQ(weighted_stirling(5, 0, 3), Rational(243));
    EXPECT_EQ(weighted_stirling(3, 1, 1), Rational(7));
    EXPECT_EQ(weighted_stirling_poly(3, 1).substitute("k", 1).constant_term(), Rational(7));
    EXPECT_EQ(stirling2(5, 3), Rational(25));
    expect_pass(check_ws_egf({0, 6}, {-3, 3}, 20));
}

TEST(PL, PrintedPolynomials)
{
    for (long l = 1; l <= 3; ++l) {
        EXPECT_TRUE(compute_p_l(l) == printed_p_l(l)) << l;
    }
    EXPECT_FALSE(compute_p_l(2) == printed_p_l(3));
    expect_pass(check_p_l({1, 4}, {-5, 5}, 20));
}

TEST(QL, MatchesPAtOne)
{
    for (long l = 1; l <= 3; ++l) {
        EXPECT_EQ(compute_q_l(l), printed_p_l(l).at_k(1));
    }
    EXPECT_EQ(polynomial_to_string(compute_q_l(2), "u"), "1 - 1/2*u");
    expect_pass(check_q_l({1, 4}, 20));
}

TEST(RM, PrintedPolynomials)
{
    for (long m = 0; m <= 2; ++m) {
        EXPECT_EQ(compute_r_m(m), printed_r_m(m)) << m;
    }
    for (long m = 0; m <= 4; ++m) {
        const MultiPoly r = compute_r_m(m);
        EXPECT_EQ(r.degree_in("u"), m);
        EXPECT_LE(r.degree_in("k"), m);
    }
    expect_pass(check_r_m({0, 4}, {-3, 5}, 20));
}

TEST(FiniteDifference, Examples)
{
    auto values = [](auto fn) {
        std::vector<Rational> v;
        for (long n = 0; n < 10; ++n) {
            v.push_back(fn(Rational(n)));
        }
        return v;
    };
    const auto sq = values([](Rational n) { return n * n; });
    EXPECT_EQ(finite_difference(sq, 0, 2, 3), Rational(2));
    const auto cubic = values([](Rational n) { return n * n * n - n; });
    EXPECT_EQ(finite_difference(cubic, 0, 4, 1), Rational(0));
    const auto five = values([](Rational n) { return Rational(5) * n * n * n; });
    EXPECT_EQ(finite_difference(five, 0, 3, 0), Rational(30));
    EXPECT_THROW(finite_difference(sq, 0, 4, 6), InsufficientRange);
    expect_pass(check_ffd_lemma(8, 7));
}

TEST(Narayana, Examples)
{
    EXPECT_EQ(narayana_number(4, 2), Rational(6));
    const auto r = check_narayana_suite({1, 3}, 8);
    expect_pass(r);
}

TEST(Narayana, FussProfiles)
{
    expect_pass(check_fuss_narayana({1, 1}, {2, 2}, 6));
    expect_pass(check_fuss_narayana({2, 3}, {1, 3}, 7));
    expect_pass(check_fuss_narayana({-2, 1}, {1, 2}, 7));
    expect_pass(check_fuss_narayana({1, 2, -1}, {1, 2}, 5));
}

TEST(RationalExpansion, Examples)
{
    expect_pass(check_rational_expansion({0, 0}, {0, 0}, 6));
    expect_pass(check_rational_expansion({1, 1}, {0, 0}, 3));
    expect_pass(check_rational_expansion({0, 3}, {0, 3}, 10));
    EXPECT_EQ(binom(2, 1) * binom(2, 1), Rational(4));
}

TEST(Raney, AgreesWithSolver)
{
    expect_pass(check_raney(5, {1, 2}));
}

TEST(SchurJabotinsky, RandomAndWorkedPair)
{
    expect_pass(check_schur_jabotinsky(20, 6, 3));
}

TEST(Hirzebruch, Residues)
{
    expect_pass(check_hirzebruch_residue(20, 30, 5));
}

TEST(Registry, StableNames)
{
    const std::vector<std::string> names{"catalan", "fuss-catalan", "jensen", "rothe-hagen", "tree-function",
                                         "lacasse", "abel", "weighted-stirling", "p-l", "r-m", "q-l",
                                         "fc-polynomial", "narayana", "fuss-narayana", "rational-expansion",
                                         "finite-difference-lemma", "raney", "schur-jabotinsky",
                                         "hirzebruch-residue"};
    ASSERT_EQ(identity_registry().size(), names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        EXPECT_EQ(identity_registry()[i].name, names[i]);
    }
    EXPECT_THROW(find_identity("catalan-numbers"), UnknownIdentity);
}

TEST(Registry, ParamsParsing)
{
    IdentityParams p{{"k", "-2..3"}, {"p", "4"}, {"r", "1,-2"}};
    EXPECT_EQ(p.get_range("k", {0, 0}).lo, -2);
    EXPECT_EQ(p.get_range("k", {0, 0}).hi, 3);
    EXPECT_EQ(p.get_range("p", {0, 0}).hi, 4);
    EXPECT_EQ(p.get_list("r", {}), (std::vector<long>{1, -2}));
    EXPECT_EQ(p.get_int("missing", 9), 9);
    p.set("bad", "3x");
    EXPECT_THROW(p.get_int("bad", 0), InvalidArgument);
    p.set("empty", "4..1");
    EXPECT_THROW(p.get_range("empty", {0, 0}), InvalidArgument);
}

TEST(Registry, EveryDefaultPasses)
{
    for (const auto &e : identity_registry()) {
        const auto r = e.run(IdentityParams{}, std::min(default_identity_order(e.name), 12));
        expect_pass(r);
    }
}

TEST(Format, Polynomials)
{
    EXPECT_EQ(polynomial_to_string({2, -1}), "2 - x");
    EXPECT_EQ(polynomial_to_string({}), "0");
    EXPECT_EQ(polynomial_to_string({0, 0, Rational(-3, 2)}), "-3/2*x^2");
    EXPECT_EQ(polynomial_to_string({Rational(1, 2), 1, 0, 1}), "1/2 + x + x^3");
}
