// One line per acceptance criterion: PASS/FAIL, elapsed time, limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <lagrange_kit/identities/registry.hpp>
#include <lagrange_kit/lagrange/derivative_forms.hpp>
#include <lagrange_kit/lagrange/forms.hpp>
#include <lagrange_kit/oracle/registry.hpp>
#include <lagrange_kit/random.hpp>
#include <lagrange_kit/series_functions.hpp>

using namespace lagrange_kit;
using PS = PowerSeries<Rational>;
using LS = LaurentSeries<Rational>;
using Outcome = std::optional<std::string>; // failure detail, empty on success

namespace
{

struct Criterion
{
    int id;
    std::string title;
    double limit_s; // 0 means no limit
    std::function<Outcome()> run;
};

// Folds reports: the first failing one wins.
Outcome first_failure(std::initializer_list<IdentityReport> reports)
{
    for (const auto &r : reports) {
        if (!r.passed()) {
            return r.name + ": " + *r.first_failure;
        }
    }
    return std::nullopt;
}

Outcome table_failure(const OracleTable &t)
{
    for (const auto &row : t.rows) {
        if (!row.match()) {
            return t.kind + " " + row.key + ": " + row.oracle.get_str() + " vs " + row.formula.to_string();
        }
    }
    if (t.rows.empty()) {
        return t.kind + ": empty table";
    }
    return std::nullopt;
}

// R(0) = 1, degree <= 4, |num|, den <= 3.
PS random_r(std::mt19937_64 &rng, int order)
{
    std::uniform_int_distribution<int> deg(0, 4);
    auto c = random_series(rng, order, 1, deg(rng) + 1).coefficients();
    c[0] = Rational(1);
    return PS(c, order);
}

Outcome five_forms()
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> low(-3, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const PS R = random_r(rng, 40);
        const int lo = low(rng);
        const LS phi = random_laurent(rng, lo, lo + 6, 40);
        for (const auto &v : coeff_all_forms(phi, R, -6, 20)) {
            if (const auto bad = v.first_disagreement()) {
                return "trial " + std::to_string(trial) + " n=" + std::to_string(v.n) + " form " +
                       std::string(1, static_cast<char>('A' + static_cast<int>(*bad)));
            }
        }
    }
    return std::nullopt;
}

Outcome reversion_round_trip()
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const PS f = random_reversible(rng, 25, 24, false);
        if (!(compose(f, reversion(f)) == PS::x(25)) || !(compose(reversion(f), f) == PS::x(25))) {
            return "trial " + std::to_string(trial);
        }
    }
    return std::nullopt;
}

Outcome printed_polynomials()
{
    std::vector<IdentityReport> reports{check_p_l({1, 3}, {-3, 3}, 30), check_r_m({0, 2}, {-3, 3}, 30),
                                        check_q_l({1, 3}, 30)};
    for (long p = 2; p <= 4; ++p) {
        for (long i = 0; i <= 2; ++i) {
            for (long d = 1; d <= 3; ++d) {
                reports.push_back(check_fc_polynomiality(p, i, i + d, 30));
            }
        }
    }
    for (const auto &r : reports) {
        if (!r.passed()) {
            return r.name + ": " + *r.first_failure;
        }
    }
    return std::nullopt;
}

Outcome two_stack_sortable()
{
    const auto r = check_fc_polynomiality(3, 0, 2, 21);
    if (!r.passed()) {
        return *r.first_failure;
    }
    for (const auto &[k, v] : r.results) {
        if (k == "two_stack_sortable_polynomial") {
            return v == "2 - x" ? Outcome{} : Outcome{"got " + v};
        }
    }
    return "no polynomial reported";
}

Outcome oracles()
{
    if (const auto bad = census_matches_lagrange(8, 3)) {
        return "ordered census vs Lagrange: " + *bad;
    }
    std::vector<OracleTable> tables;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= 3; ++k) {
            tables.push_back(ordered_forest_table(n, k));
        }
    }
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            tables.push_back(labeled_forest_table(n, k));
        }
    }
    for (int m = 2; m <= 7; ++m) {
        tables.push_back(degree_tree_table(m));
    }
    for (int m = 2; m <= 6; ++m) {
        tables.push_back(prufer_table(m));
    }
    tables.push_back(cycle_lemma_table({-1, 0, 1, 2}, 8));
    for (const auto &t : tables) {
        if (auto bad = table_failure(t)) {
            return bad;
        }
    }
    return std::nullopt;
}

Outcome derivative_and_cauchy()
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const PS phi = random_series(rng, 16), psi = random_series(rng, 16), H = random_series(rng, 16);
        if (!derivative_forms(phi, psi, H, 6).agree()) {
            return "derivative forms, trial " + std::to_string(trial);
        }
        const PS a = random_series(rng, 14, 0, 4), b = random_series(rng, 14, 0, 4), h = random_series(rng, 14, 0, 4);
        for (int n = 0; n <= 5; ++n) {
            if (!cauchy_convolution_check(a, b, h, n).pass()) {
                return "Cauchy convolutions, trial " + std::to_string(trial) + " n=" + std::to_string(n);
            }
        }
    }
    return std::nullopt;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "five inversion forms agree with direct substitution", 10, five_forms},
        {2, "reversion round trip", 5, reversion_round_trip},
        {3, "Catalan suite", 5, [] { return first_failure({check_catalan_suite({-5, 5}, 51)}); }},
        {4, "tree function suite", 10,
         [] {
             return first_failure({check_tree_function_suite({-3, 5}, 31), check_lacasse(20),
                                   check_abel({-3, 3}, {-2, 2}, 8)});
         }},
        {5, "printed polynomials reproduced", 0, printed_polynomials},
        {6, "Fuss-Catalan suite", 15,
         [] {
             return first_failure({check_fuss_catalan({2, 5}, {-3, 5}, 31), check_rothe_hagen({0, 4}, {-6, 6}, 8),
                                   check_jensen({0, 4}, {-6, 6}, {-6, 6}, 8)});
         }},
        {7, "2-stack-sortable polynomial is 2 - x", 0, two_stack_sortable},
        {8, "combinatorial oracles", 60, oracles},
        {9, "Raney coefficients", 0, [] { return first_failure({check_raney(5, {1, 2})}); }},
        {10, "Hirzebruch residue", 0, [] { return first_failure({check_hirzebruch_residue(20, 30, 5)}); }},
        {11, "derivative forms and Cauchy convolutions", 0, derivative_and_cauchy},
        {12, "Schur-Jabotinsky", 0, [] { return first_failure({check_schur_jabotinsky(20, 6, 3)}); }},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception &e) {
            outcome = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!outcome && c.limit_s > 0 && s > c.limit_s) {
            outcome = "over time limit";
        }
        failures += outcome ? 1 : 0;
        std::string limit = c.limit_s > 0 ? ", limit " + std::to_string(static_cast<int>(c.limit_s)) + " s" : "";
        std::printf("%s %2d %s (%.2f s%s)%s%s\n", outcome ? "FAIL" : "PASS", c.id, c.title.c_str(), s, limit.c_str(),
                    outcome ? ": " : "", outcome ? outcome->c_str() : "");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
