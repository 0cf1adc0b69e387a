#ifndef LAGRANGE_KIT_ORACLE_ORDERED_FOREST_HPP
#define LAGRANGE_KIT_ORACLE_ORDERED_FOREST_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/lagrange/solve.hpp>
#include <lagrange_kit/multipoly.hpp>
#include <lagrange_kit/oracle/table.hpp>
#include <lagrange_kit/rational.hpp>
#include <lagrange_kit/series_functions.hpp>

namespace lagrange_kit
{

inline constexpr int ordered_forest_size_limit = 12;

struct OrderedTree
{
    std::vector<OrderedTree> children;

    friend bool operator==(const OrderedTree &, const OrderedTree &) = default;
};

struct OrderedForest
{
    std::vector<OrderedTree> trees;

    int k() const
    {
        return static_cast<int>(trees.size());
    }
    friend bool operator==(const OrderedForest &, const OrderedForest &) = default;
};

namespace detail
{

inline void append_suffix(const OrderedTree &t, std::vector<int> &out)
{
    for (const auto &c : t.children) {
        append_suffix(c, out);
    }
    out.push_back(static_cast<int>(t.children.size()));
}

inline void add_profile(const OrderedTree &t, std::vector<long> &profile)
{
    const std::size_t i = t.children.size();
    if (profile.size() <= i) {
        profile.resize(i + 1, 0);
    }
    ++profile[i];
    for (const auto &c : t.children) {
        add_profile(c, profile);
    }
}

} // namespace detail

// Children's codes in order, then the root's child count; trees concatenated.
inline std::vector<int> suffix_code(const OrderedForest &forest)
{
    std::vector<int> out;
    for (const auto &t : forest.trees) {
        detail::append_suffix(t, out);
    }
    return out;
}

inline std::vector<int> reduced_code(const OrderedForest &forest)
{
    std::vector<int> out = suffix_code(forest);
    for (int &v : out) {
        --v;
    }
    return out;
}

// Throws InvalidCode unless the entries are >= -1, every partial sum is
// negative and the total is -k.
inline void validate_reduced_code(const std::vector<int> &code, int k)
{
    if (k < 1) {
        throw InvalidCode("a forest has at least one tree");
    }
    long sum = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i] < -1) {
            throw InvalidCode("entry " + std::to_string(code[i]) + " at position " + std::to_string(i) +
                              " is below -1");
        }
        sum += code[i];
        if (sum >= 0) {
            throw InvalidCode("partial sum through position " + std::to_string(i) + " is " + std::to_string(sum));
        }
    }
    if (sum != -k) {
        throw InvalidCode("code sums to " + std::to_string(sum) + ", expected " + std::to_string(-k));
    }
}

inline OrderedForest decode_reduced(const std::vector<int> &code, int k)
{
    validate_reduced_code(code, k);
    std::vector<OrderedTree> stack;
    for (int a : code) {
        const std::size_t j = static_cast<std::size_t>(a + 1);
        // The partial sum condition keeps the stack deep enough.
        OrderedTree node;
        node.children.assign(stack.end() - static_cast<std::ptrdiff_t>(j), stack.end());
        stack.resize(stack.size() - j);
        stack.push_back(std::move(node));
    }
    return OrderedForest{std::move(stack)};
}

inline OrderedForest decode_suffix(const std::vector<int> &code, int k)
{
    std::vector<int> reduced = code;
    for (int &v : reduced) {
        --v;
    }
    return decode_reduced(reduced, k);
}

// n_i = number of vertices with i children.
inline std::vector<long> child_profile(const OrderedForest &forest)
{
    std::vector<long> profile;
    for (const auto &t : forest.trees) {
        detail::add_profile(t, profile);
    }
    return profile;
}

// Every reduced code of length n for a k-forest, in lexicographic order.
inline void for_each_reduced_code(int n, int k, const std::function<void(const std::vector<int> &)> &visit)
{
    if (n > ordered_forest_size_limit) {
        throw SizeLimit("ordered forests are enumerated only up to " + std::to_string(ordered_forest_size_limit) +
                        " vertices");
    }
    if (k < 1 || n < k) {
        return;
    }
    std::vector<int> code(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int pos, int sum) {
        if (pos == n) {
            if (sum == -k) {
                visit(code);
            }
            return;
        }
        const int left = n - pos - 1;
        // The remaining entries can lower the sum by at most `left`.
        for (int a = -1; sum + a < 0 && sum + a - left <= -k; ++a) {
            code[static_cast<std::size_t>(pos)] = a;
            rec(pos + 1, sum + a);
        }
    };
    rec(0, 0);
}

inline std::vector<OrderedForest> enumerate_ordered_forests(int n, int k)
{
    std::vector<OrderedForest> out;
    for_each_reduced_code(n, k, [&](const std::vector<int> &code) { out.push_back(decode_reduced(code, k)); });
    return out;
}

// Trailing zeros dropped so that profiles compare as keys.
inline std::vector<long> trim_profile(std::vector<long> p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
    return p;
}

// Census of k-forests with n vertices by child-count profile.
inline std::map<std::vector<long>, Integer> ordered_forest_census(int n, int k)
{
    std::map<std::vector<long>, Integer> census;
    for_each_reduced_code(n, k, [&](const std::vector<int> &code) {
        std::vector<long> p;
        for (int a : code) {
            const std::size_t i = static_cast<std::size_t>(a + 1);
            if (p.size() <= i) {
                p.resize(i + 1, 0);
            }
            ++p[i];
        }
        census[p] += 1;
    });
    return census;
}

inline Integer count_by_profile(int n, int k, const std::vector<long> &profile)
{
    const auto census = ordered_forest_census(n, k);
    const auto it = census.find(trim_profile(profile));
    return it == census.end() ? Integer(0) : it->second;
}

// (k/n) multinomial(n; n_0, n_1, ...) when sum n_i = n and sum i n_i = n - k, else 0.
inline Rational ordered_forest_formula(int n, int k, const std::vector<long> &profile)
{
    long total = 0, weighted = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        total += profile[i];
        weighted += static_cast<long>(i) * profile[i];
    }
    if (n < 1 || total != n || weighted != n - k) {
        return Rational(0);
    }
    return Rational(k, n) * Rational(multinomial(n, profile));
}

// Every profile of (n, k): census against the formula.
inline OracleTable ordered_forest_table(int n, int k)
{
    OracleTable table{"ordered-forest", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}, {}};
    Integer total = 0;
    for (const auto &[profile, count] : ordered_forest_census(n, k)) {
        table.rows.push_back({tuple_text(profile), count, ordered_forest_formula(n, k, profile)});
        total += count;
    }
    // All k-forests: [x^n] f^k for f = x/(1-f).
    table.rows.push_back({"total", total, n >= k && k >= 1 ? Rational(k, n) * Rational(binomial(2 * n - k - 1, n - k))
                                                           : Rational(0)});
    return table;
}

// [x^n] f^k for f = x R(f), R = r0 + r1 t + ... + r4 t^4 with symbolic r_i,
// against the census weighted by prod r_i^{n_i} (profiles using at most 4
// children), for every n <= n_max and k <= k_max. Returns the first mismatch.
inline std::optional<std::string> census_matches_lagrange(int n_max, int k_max)
{
    const std::vector<std::string> names{"r0", "r1", "r2", "r3", "r4"};
    const auto r = MultiPoly::generators(names);
    const int order = n_max + 1;
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(order));
    for (std::size_t i = 0; i < r.size() && i < coeffs.size(); ++i) {
        coeffs[i] = r[i];
    }
    const PowerSeries<MultiPoly> f = solve_xr(PowerSeries<MultiPoly>(coeffs, order), order);
    for (int k = 1; k <= k_max; ++k) {
        const PowerSeries<MultiPoly> fk = pow(f, static_cast<long>(k));
        for (int n = 1; n <= n_max; ++n) {
            MultiPoly weighted;
            for (const auto &[profile, count] : ordered_forest_census(n, k)) {
                if (profile.size() > r.size()) {
                    continue;
                }
                MultiPoly term{Rational(count)};
                for (std::size_t i = 0; i < profile.size(); ++i) {
                    term = term * power(r[i], profile[i]);
                }
                weighted += term;
            }
            if (!(weighted == fk[n])) {
                return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": census " + weighted.to_string() +
                       ", series " + fk[n].to_string();
            }
        }
    }
    return std::nullopt;
}

} // namespace lagrange_kit

#endif
