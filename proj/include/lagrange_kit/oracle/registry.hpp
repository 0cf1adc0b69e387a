#ifndef LAGRANGE_KIT_ORACLE_REGISTRY_HPP
#define LAGRANGE_KIT_ORACLE_REGISTRY_HPP

#include <string>
#include <vector>

#include <lagrange_kit/identities/report.hpp>
#include <lagrange_kit/oracle/cycle_lemma.hpp>
#include <lagrange_kit/oracle/labeled_forest.hpp>
#include <lagrange_kit/oracle/ordered_forest.hpp>
#include <lagrange_kit/oracle/prufer.hpp>
#include <lagrange_kit/oracle/table.hpp>

namespace lagrange_kit
{

inline const std::vector<std::string> &oracle_kinds()
{
    static const std::vector<std::string> kinds{"ordered-forest", "labeled-forest", "prufer", "cycle-lemma",
                                                "degree-trees"};
    return kinds;
}

// Parameters: n, k for the forests; m for prufer and degree-trees;
// alphabet (comma list) and len for cycle-lemma.
inline OracleTable run_oracle(const std::string &kind, const IdentityParams &p)
{
    if (kind == "ordered-forest") {
        return ordered_forest_table(static_cast<int>(p.get_int("n", 5)), static_cast<int>(p.get_int("k", 1)));
    }
    if (kind == "labeled-forest") {
        return labeled_forest_table(static_cast<int>(p.get_int("n", 5)), static_cast<int>(p.get_int("k", 1)));
    }
    if (kind == "prufer") {
        return prufer_table(static_cast<int>(p.get_int("m", 5)));
    }
    if (kind == "degree-trees") {
        return degree_tree_table(static_cast<int>(p.get_int("m", 5)));
    }
    if (kind == "cycle-lemma") {
        std::vector<int> alphabet;
        for (long a : p.get_list("alphabet", {-1, 0, 1, 2})) {
            alphabet.push_back(static_cast<int>(a));
        }
        return cycle_lemma_table(alphabet, static_cast<int>(p.get_int("len", 6)));
    }
    throw InvalidArgument("unknown oracle '" + kind + "'");
}

} // namespace lagrange_kit

#endif
