#include <gtest/gtest.h>

#include <lagrange_kit/oracle/registry.hpp>

using namespace lagrange_kit;

namespace
{

void expect_all_match(const OracleTable &t)
{
    ASSERT_FALSE(t.rows.empty()) << t.kind;
    for (const auto &r : t.rows) {
        EXPECT_TRUE(r.match()) << t.kind << " " << r.key << ": " << r.oracle << " vs " << r.formula;
    }
}

OrderedTree leaf()
{
    return OrderedTree{};
}

} // namespace

TEST(OrderedForest, FigureForest)
{
    const OrderedForest forest{{OrderedTree{{leaf(), leaf()}}, OrderedTree{{leaf()}}}};
    EXPECT_EQ(suffix_code(forest), (std::vector<int>{0, 0, 2, 0, 1}));
    EXPECT_EQ(reduced_code(forest), (std::vector<int>{-1, -1, 1, -1, 0}));
    EXPECT_EQ(decode_reduced({-1, -1, 1, -1, 0}, 2), forest);
    EXPECT_EQ(decode_suffix({0, 0, 2, 0, 1}, 2), forest);
}

TEST(OrderedForest, SingleVertex)
{
    const OrderedForest one{{leaf()}};
    EXPECT_EQ(suffix_code(one), std::vector<int>{0});
    EXPECT_EQ(reduced_code(one), std::vector<int>{-1});
    EXPECT_EQ(enumerate_ordered_forests(1, 1).size(), 1u);
}

TEST(OrderedForest, InvalidCodes)
{
    EXPECT_THROW(decode_reduced({0, -1}, 1), InvalidCode);
    EXPECT_THROW(decode_reduced({-1, -1}, 1), InvalidCode);
    EXPECT_THROW(decode_reduced({-2, 1}, 1), InvalidCode);
    EXPECT_THROW(decode_reduced({-1, 0}, 2), InvalidCode);
}

TEST(OrderedForest, Counts)
{
    EXPECT_EQ(count_by_profile(3, 1, {2, 0, 1}), Integer(1));
    EXPECT_EQ(enumerate_ordered_forests(4, 1).size(), 5u);
    EXPECT_EQ(count_by_profile(4, 1, {2, 2}), Integer(0));
    EXPECT_EQ(ordered_forest_formula(4, 1, {2, 2}), Rational(0));
    EXPECT_THROW(enumerate_ordered_forests(13, 1), SizeLimit);
}

TEST(OrderedForest, RoundTripExhaustive)
{
    for (int n = 1; n <= 7; ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (const auto &f : enumerate_ordered_forests(n, k)) {
                const auto code = reduced_code(f);
                ASSERT_EQ(decode_reduced(code, k), f);
                ASSERT_EQ(child_profile(f).size() > 0, true);
            }
        }
    }
}

TEST(OrderedForest, CensusAgainstFormula)
{
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= 3; ++k) {
            expect_all_match(ordered_forest_table(n, k));
        }
    }
}

TEST(OrderedForest, CensusAgainstLagrange)
{
    EXPECT_EQ(census_matches_lagrange(8, 3), std::nullopt);
}

TEST(CycleLemma, Examples)
{
    EXPECT_EQ(cycle_lemma_count({-1}), 1);
    EXPECT_EQ(cycle_lemma_count({-1, -1, 1, -1, 0}), 2);
    EXPECT_THROW(cycle_lemma_count({0, 1}), BadSequence);
    EXPECT_THROW(cycle_lemma_count({-2, 0}), BadSequence);
}

TEST(CycleLemma, Exhaustive)
{
    expect_all_match(cycle_lemma_table({-1, 0, 1, 2}, 8));
    expect_all_match(cycle_lemma_table({-1, 0, 1}, 6));
    EXPECT_THROW(cycle_lemma_table({-1}, 13), SizeLimit);
}

TEST(Prufer, Examples)
{
    EXPECT_EQ(prufer_encode(make_tree(3, {{1, 2}, {2, 3}})), std::vector<int>{2});
    EXPECT_EQ(prufer_encode(make_tree(4, {{1, 4}, {2, 4}, {3, 4}})), (std::vector<int>{4, 4}));
    EXPECT_EQ(prufer_decode({4, 4}), make_tree(4, {{1, 4}, {2, 4}, {3, 4}}));
    EXPECT_THROW(prufer_encode(make_tree(4, {{1, 2}, {2, 3}, {1, 3}})), NotATree);
    EXPECT_THROW(prufer_encode(make_tree(4, {{1, 2}, {3, 4}})), NotATree);
    EXPECT_THROW(prufer_decode({5}), InvalidCode);
}

TEST(Prufer, RoundTripExhaustive)
{
    for (int m = 2; m <= 6; ++m) {
        const auto t = prufer_table(m);
        expect_all_match(t);
    }
    EXPECT_EQ(enumerate_labeled_trees(5).size(), 125u);
}

TEST(DegreeTrees, Examples)
{
    EXPECT_EQ(count_degree_trees(4, {1, 1, 1, 3}), Integer(1));
    EXPECT_EQ(degree_tree_formula({1, 1, 1, 3}), Integer(1));
    EXPECT_EQ(degree_tree_formula({1, 1, 1, 1}), Integer(0));
    EXPECT_EQ(count_degree_trees(4, {1, 1, 1, 1}), Integer(0));
    EXPECT_THROW(enumerate_labeled_trees(9), SizeLimit);
}

TEST(DegreeTrees, Exhaustive)
{
    for (int m = 2; m <= 7; ++m) {
        expect_all_match(degree_tree_table(m));
    }
    EXPECT_THROW(degree_tree_table(1), InvalidArgument);
}

TEST(LabeledForest, Examples)
{
    EXPECT_EQ(count_labeled_forests(3, 1, {2, 0, 0}), Integer(1));
    EXPECT_EQ(labeled_forest_formula(3, 1, {2, 0, 0}), Integer(1));
    EXPECT_EQ(labeled_forest_profile_count(2, 1, {1, 1}), Integer(2));
    EXPECT_EQ(labeled_profile_formula(2, 1, {1, 1}), Rational(2));
    EXPECT_EQ(labeled_forest_profile_count(4, 4, {4}), Integer(1));
    EXPECT_THROW(labeled_forest_census(8, 1), SizeLimit);
}

TEST(LabeledForest, Exhaustive)
{
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            expect_all_match(labeled_forest_table(n, k));
        }
    }
}

TEST(LabeledForest, PrunedSearchMatchesCensus)
{
    const int n = 5, k = 2;
    std::map<std::vector<long>, Integer> census;
    for_each_labeled_forest(n, k, std::nullopt, [&](const LabeledForest &f) { census[f.child_counts()] += 1; });
    for (const auto &[e, count] : census) {
        EXPECT_EQ(count_labeled_forests(n, k, e), count);
    }
}

TEST(OracleRegistry, Kinds)
{
    EXPECT_EQ(oracle_kinds().size(), 5u);
    const auto t = run_oracle("prufer", IdentityParams{{"m", "5"}});
    expect_all_match(t);
    EXPECT_EQ(t.rows.front().oracle, Integer(125));
    expect_all_match(run_oracle("ordered-forest", IdentityParams{{"n", "1"}, {"k", "1"}}));
    EXPECT_THROW(run_oracle("heap", IdentityParams{}), InvalidArgument);
}
