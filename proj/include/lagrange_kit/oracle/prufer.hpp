#ifndef LAGRANGE_KIT_ORACLE_PRUFER_HPP
#define LAGRANGE_KIT_ORACLE_PRUFER_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/oracle/table.hpp>
#include <lagrange_kit/rational.hpp>

namespace lagrange_kit
{

inline constexpr int labeled_tree_size_limit = 8;

// Undirected tree on [m] = {1..m}; edges stored with first < second, sorted.
struct LabeledTree
{
    int m = 0;
    std::vector<std::pair<int, int>> edges;

    friend bool operator==(const LabeledTree &, const LabeledTree &) = default;
};

inline LabeledTree make_tree(int m, std::vector<std::pair<int, int>> edges)
{
    for (auto &e : edges) {
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
    }
    std::sort(edges.begin(), edges.end());
    return LabeledTree{m, std::move(edges)};
}

// Throws NotATree unless the edges form a spanning tree of [m].
inline void validate_tree(const LabeledTree &t)
{
    if (t.m < 1) {
        throw NotATree("vertex set is empty");
    }
    if (static_cast<int>(t.edges.size()) != t.m - 1) {
        throw NotATree(std::to_string(t.edges.size()) + " edges on " + std::to_string(t.m) + " vertices");
    }
    std::vector<int> root(static_cast<std::size_t>(t.m + 1));
    std::iota(root.begin(), root.end(), 0);
    const std::function<int(int)> find = [&](int v) {
        while (root[static_cast<std::size_t>(v)] != v) {
            v = root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
        }
        return v;
    };
    for (const auto &[a, b] : t.edges) {
        if (a < 1 || b > t.m || a == b) {
            throw NotATree("bad edge " + std::to_string(a) + "-" + std::to_string(b));
        }
        const int ra = find(a), rb = find(b);
        if (ra == rb) {
            throw NotATree("edge " + std::to_string(a) + "-" + std::to_string(b) + " closes a cycle");
        }
        root[static_cast<std::size_t>(ra)] = rb;
    }
}

inline std::vector<int> degrees(const LabeledTree &t)
{
    std::vector<int> d(static_cast<std::size_t>(t.m), 0);
    for (const auto &[a, b] : t.edges) {
        ++d[static_cast<std::size_t>(a - 1)];
        ++d[static_cast<std::size_t>(b - 1)];
    }
    return d;
}

// Repeatedly remove the least leaf and record its neighbor, m - 2 times.
inline std::vector<int> prufer_encode(const LabeledTree &t)
{
    validate_tree(t);
    if (t.m < 2) {
        throw NotATree("Pruefer codes need at least two vertices");
    }
    std::vector<std::set<int>> adj(static_cast<std::size_t>(t.m + 1));
    for (const auto &[a, b] : t.edges) {
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
    std::set<int> leaves;
    for (int v = 1; v <= t.m; ++v) {
        if (adj[static_cast<std::size_t>(v)].size() == 1) {
            leaves.insert(v);
        }
    }
    std::vector<int> code;
    for (int step = 0; step < t.m - 2; ++step) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        const int nb = *adj[static_cast<std::size_t>(leaf)].begin();
        code.push_back(nb);
        auto &nset = adj[static_cast<std::size_t>(nb)];
        nset.erase(leaf);
        if (nset.size() == 1) {
            leaves.insert(nb);
        }
    }
    return code;
}

inline LabeledTree prufer_decode(const std::vector<int> &code)
{
    const int m = static_cast<int>(code.size()) + 2;
    std::vector<int> remaining(static_cast<std::size_t>(m + 1), 1);
    for (int b : code) {
        if (b < 1 || b > m) {
            throw InvalidCode("entry " + std::to_string(b) + " is outside [1, " + std::to_string(m) + "]");
        }
        ++remaining[static_cast<std::size_t>(b)];
    }
    std::set<int> leaves;
    for (int v = 1; v <= m; ++v) {
        if (remaining[static_cast<std::size_t>(v)] == 1) {
            leaves.insert(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int b : code) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, b);
        if (--remaining[static_cast<std::size_t>(b)] == 1) {
            leaves.insert(b);
        }
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return make_tree(m, std::move(edges));
}

// Every tree on [m], found among the (m-1)-subsets of edges of K_m.
inline std::vector<LabeledTree> enumerate_labeled_trees(int m)
{
    if (m > labeled_tree_size_limit) {
        throw SizeLimit("labeled trees are enumerated only up to " + std::to_string(labeled_tree_size_limit) +
                        " vertices");
    }
    std::vector<LabeledTree> out;
    if (m < 1) {
        return out;
    }
    if (m == 1) {
        out.push_back(LabeledTree{1, {}});
        return out;
    }
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) {
            all.emplace_back(a, b);
        }
    }
    std::vector<std::pair<int, int>> chosen;
    std::vector<int> root(static_cast<std::size_t>(m + 1));
    // Union-find without path compression so that edges can be undone.
    const std::function<int(int)> find = [&](int v) {
        while (root[static_cast<std::size_t>(v)] != v) {
            v = root[static_cast<std::size_t>(v)];
        }
        return v;
    };
    std::iota(root.begin(), root.end(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (static_cast<int>(chosen.size()) == m - 1) {
            out.push_back(LabeledTree{m, chosen});
            return;
        }
        const std::size_t need = static_cast<std::size_t>(m - 1) - chosen.size();
        for (std::size_t i = next; i + need <= all.size(); ++i) {
            const int ra = find(all[i].first), rb = find(all[i].second);
            if (ra == rb) {
                continue;
            }
            root[static_cast<std::size_t>(ra)] = rb;
            chosen.push_back(all[i]);
            rec(i + 1);
            chosen.pop_back();
            root[static_cast<std::size_t>(ra)] = ra;
        }
    };
    rec(0);
    return out;
}

// Number of trees on [m] for every degree sequence that occurs.
inline std::map<std::vector<int>, Integer> degree_census(int m)
{
    std::map<std::vector<int>, Integer> census;
    for (const auto &t : enumerate_labeled_trees(m)) {
        census[degrees(t)] += 1;
    }
    return census;
}

// multinomial(m-2; d_1-1, ..., d_m-1) when sum d_i = 2(m-1), else 0.
inline Integer degree_tree_formula(const std::vector<int> &d)
{
    const long m = static_cast<long>(d.size());
    long sum = 0;
    std::vector<long> parts;
    for (int v : d) {
        if (v < 1) {
            return 0;
        }
        sum += v;
        parts.push_back(v - 1);
    }
    if (m < 1 || sum != 2 * (m - 1)) {
        return m == 1 && sum == 0 ? Integer(1) : Integer(0);
    }
    return multinomial(m - 2, parts);
}

inline Integer count_degree_trees(int m, const std::vector<int> &d)
{
    if (static_cast<int>(d.size()) != m) {
        throw InvalidArgument("need one degree per vertex");
    }
    const auto census = degree_census(m);
    const auto it = census.find(d);
    return it == census.end() ? Integer(0) : it->second;
}

// Round trips over every tree on [m] and every code in [m]^{m-2}; the oracle
// side counts trees whose code decodes back, the formula side is m^{m-2}.
inline OracleTable prufer_table(int m)
{
    if (m < 2) {
        throw InvalidArgument("Pruefer codes need m >= 2");
    }
    OracleTable table{"prufer", {{"m", std::to_string(m)}}, {}};
    const auto trees = enumerate_labeled_trees(m);
    long round_trips = 0, degree_ok = 0;
    std::set<std::vector<int>> codes;
    for (const auto &t : trees) {
        const auto code = prufer_encode(t);
        round_trips += prufer_decode(code) == t ? 1 : 0;
        codes.insert(code);
        // A vertex of degree d appears d - 1 times.
        const auto d = degrees(t);
        bool ok = true;
        for (int v = 1; v <= m; ++v) {
            ok = ok && std::count(code.begin(), code.end(), v) == d[static_cast<std::size_t>(v - 1)] - 1;
        }
        degree_ok += ok ? 1 : 0;
    }
    const Integer cayley = Integer(pow(Rational(m), m - 2).numerator());
    table.rows.push_back({"trees", Integer(static_cast<long>(trees.size())), Rational(cayley)});
    table.rows.push_back({"encode-decode", Integer(round_trips), Rational(cayley)});
    table.rows.push_back({"degree multiplicity", Integer(degree_ok), Rational(cayley)});
    table.rows.push_back({"distinct codes", Integer(static_cast<long>(codes.size())), Rational(cayley)});

    // decode then encode over all of [m]^{m-2}.
    long back = 0;
    std::vector<int> code(static_cast<std::size_t>(m - 2), 1);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == code.size()) {
            back += prufer_encode(prufer_decode(code)) == code ? 1 : 0;
            return;
        }
        for (int v = 1; v <= m; ++v) {
            code[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    table.rows.push_back({"decode-encode", Integer(back), Rational(cayley)});
    return table;
}

// Exhaustive degree census of trees on [m] against the multinomial formula,
// plus the sum of the formula over all degree sequences against m^{m-2}.
inline OracleTable degree_tree_table(int m)
{
    if (m < 2) {
        throw InvalidArgument("degree census needs m >= 2");
    }
    OracleTable table{"degree-trees", {{"m", std::to_string(m)}}, {}};
    Integer total_formula = 0;
    // Every degree sequence with entries in 1..m-1 summing to 2(m-1).
    std::vector<int> d(static_cast<std::size_t>(m), 1);
    const auto census = degree_census(m);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == m) {
            if (left == 0) {
                const auto it = census.find(d);
                const Integer oracle = it == census.end() ? Integer(0) : it->second;
                const Integer formula = degree_tree_formula(d);
                total_formula += formula;
                table.rows.push_back({tuple_text(d), oracle, Rational(formula)});
            }
            return;
        }
        for (int v = 1; v <= std::max(1, m - 1) && v <= left; ++v) {
            d[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    if (m == 1) {
        d[0] = 0;
        table.rows.push_back({"(0)", census.begin()->second, Rational(degree_tree_formula(d))});
        total_formula = degree_tree_formula(d);
    } else {
        rec(0, 2 * (m - 1));
    }
    Integer trees = 0;
    for (const auto &[deg, c] : census) {
        trees += c;
    }
    const Rational cayley = m == 1 ? Rational(1) : pow(Rational(m), m - 2);
    table.rows.push_back({"sum of formula", total_formula, cayley});
    table.rows.push_back({"trees", trees, cayley});
    return table;
}

} // namespace lagrange_kit

#endif
