#ifndef LAGRANGE_KIT_ORACLE_LABELED_FOREST_HPP
#define LAGRANGE_KIT_ORACLE_LABELED_FOREST_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/oracle/ordered_forest.hpp>
#include <lagrange_kit/oracle/table.hpp>
#include <lagrange_kit/rational.hpp>

namespace lagrange_kit
{

inline constexpr int labeled_forest_size_limit = 7;

// Rooted forest on [n]: parent[v-1] is the parent of v, or 0 for a root.
struct LabeledForest
{
    int n = 0;
    std::vector<int> parent;

    std::vector<long> child_counts() const
    {
        std::vector<long> e(static_cast<std::size_t>(n), 0);
        for (int p : parent) {
            if (p > 0) {
                ++e[static_cast<std::size_t>(p - 1)];
            }
        }
        return e;
    }
    int roots() const
    {
        int r = 0;
        for (int p : parent) {
            r += p == 0 ? 1 : 0;
        }
        return r;
    }
};

// Parent-function search over forests of k rooted trees on [n]. With
// `children` given, vertex i must end up with children[i-1] children and
// branches exceeding a count are cut early.
inline void for_each_labeled_forest(int n, int k, const std::optional<std::vector<long>> &children,
                                    const std::function<void(const LabeledForest &)> &visit)
{
    if (n > labeled_forest_size_limit) {
        throw SizeLimit("labeled forests are enumerated only up to " + std::to_string(labeled_forest_size_limit) +
                        " vertices");
    }
    if (children && static_cast<int>(children->size()) != n) {
        throw InvalidArgument("need one child count per vertex");
    }
    if (k < 1 || n < k) {
        return;
    }
    LabeledForest f{n, std::vector<int>(static_cast<std::size_t>(n), -1)};
    std::vector<long> used(static_cast<std::size_t>(n), 0);
    int roots = 0;
    // Would v -> p close a cycle? Follow the assigned parents from p.
    const auto closes_cycle = [&](int v, int p) {
        for (int w = p; w > 0; w = f.parent[static_cast<std::size_t>(w - 1)]) {
            if (w == v) {
                return true;
            }
        }
        return false;
    };
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            if (roots == k && (!children || used == *children)) {
                visit(f);
            }
            return;
        }
        const int left = n - v;
        for (int p = 0; p <= n; ++p) {
            if (p == v) {
                continue;
            }
            if (p == 0) {
                if (roots == k) {
                    continue;
                }
            } else {
                auto &slot = used[static_cast<std::size_t>(p - 1)];
                if (children && slot == (*children)[static_cast<std::size_t>(p - 1)]) {
                    continue;
                }
                if (roots + left < k || closes_cycle(v, p)) {
                    continue;
                }
            }
            f.parent[static_cast<std::size_t>(v - 1)] = p;
            if (p == 0) {
                ++roots;
            } else {
                ++used[static_cast<std::size_t>(p - 1)];
            }
            rec(v + 1);
            if (p == 0) {
                --roots;
            } else {
                --used[static_cast<std::size_t>(p - 1)];
            }
            f.parent[static_cast<std::size_t>(v - 1)] = -1;
        }
    };
    rec(1);
}

inline Integer count_labeled_forests(int n, int k, const std::vector<long> &children)
{
    Integer count = 0;
    for_each_labeled_forest(n, k, children, [&](const LabeledForest &) { count += 1; });
    return count;
}

// multinomial(n-1; k-1, e_1, ..., e_n) when sum e_i = n - k, else 0.
inline Integer labeled_forest_formula(int n, int k, const std::vector<long> &children)
{
    std::vector<long> parts{k - 1};
    parts.insert(parts.end(), children.begin(), children.end());
    long sum = 0;
    for (long e : children) {
        sum += e;
    }
    if (k < 1 || sum != n - k) {
        return 0;
    }
    return multinomial(n - 1, parts);
}

// Forests in which the n_i vertices with i children carry labels 1..n_i:
// (n-1)! / ((k-1)! prod i!^{n_i}).
inline Rational labeled_profile_classes(int n, int k, const std::vector<long> &profile)
{
    Rational r(factorial(n - 1), factorial(k - 1));
    for (std::size_t i = 0; i < profile.size(); ++i) {
        r /= pow(Rational(factorial(static_cast<long>(i))), profile[i]);
    }
    return r;
}

// The classes count times multinomial(n; n_0, n_1, ...), or 0 when the
// profile does not fit (n, k).
inline Rational labeled_profile_formula(int n, int k, const std::vector<long> &profile)
{
    if (ordered_forest_formula(n, k, profile).is_zero()) {
        return Rational(0);
    }
    return labeled_profile_classes(n, k, profile) * Rational(multinomial(n, profile));
}

// Forests of k rooted trees on [n]: binom(n, k) k n^{n-k-1}.
inline Rational labeled_forest_total(int n, int k)
{
    return Rational(binomial(n, k)) * Rational(k) * pow(Rational(n), n - k - 1);
}

// Census of forests on [n] with k trees by profile n_i.
inline std::map<std::vector<long>, Integer> labeled_forest_census(int n, int k)
{
    std::map<std::vector<long>, Integer> census;
    for_each_labeled_forest(n, k, std::nullopt, [&](const LabeledForest &f) {
        std::vector<long> profile;
        for (long e : f.child_counts()) {
            const std::size_t i = static_cast<std::size_t>(e);
            if (profile.size() <= i) {
                profile.resize(i + 1, 0);
            }
            ++profile[i];
        }
        census[profile] += 1;
    });
    return census;
}

inline Integer labeled_forest_profile_count(int n, int k, const std::vector<long> &profile)
{
    const auto census = labeled_forest_census(n, k);
    const auto it = census.find(trim_profile(profile));
    return it == census.end() ? Integer(0) : it->second;
}

// Per child-count vector e (exhaustively over all forests), the profile
// census against both profile formulas, and the total against
// binom(n, k) k n^{n-k-1}.
inline OracleTable labeled_forest_table(int n, int k)
{
    OracleTable table{"labeled-forest", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}, {}};
    std::map<std::vector<long>, Integer> by_children;
    for_each_labeled_forest(n, k, std::nullopt,
                            [&](const LabeledForest &f) { by_children[f.child_counts()] += 1; });
    Integer total = 0;
    for (const auto &[e, count] : by_children) {
        table.rows.push_back({"e=" + tuple_text(e), count, Rational(labeled_forest_formula(n, k, e))});
        total += count;
    }
    for (const auto &[profile, count] : labeled_forest_census(n, k)) {
        table.rows.push_back({"profile=" + tuple_text(profile), count, labeled_profile_formula(n, k, profile)});
        // Quotient by the ways of assigning child counts to labels.
        const Rational classes = Rational(count) / Rational(multinomial(n, profile));
        table.rows.push_back({"classes=" + tuple_text(profile), classes.numerator(),
                              classes.is_integer() ? labeled_profile_classes(n, k, profile) : Rational(-1)});
    }
    table.rows.push_back({"total", total, labeled_forest_total(n, k)});
    return table;
}

} // namespace lagrange_kit

#endif
