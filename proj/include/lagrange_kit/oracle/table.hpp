#ifndef LAGRANGE_KIT_ORACLE_TABLE_HPP
#define LAGRANGE_KIT_ORACLE_TABLE_HPP

#include <string>
#include <utility>
#include <vector>

#include <lagrange_kit/rational.hpp>

namespace lagrange_kit
{

// One comparison: brute-force count against the closed formula.
struct OracleRow
{
    std::string key;
    Integer oracle;
    Rational formula;

    bool match() const
    {
        return Rational(oracle) == formula;
    }
};

struct OracleTable
{
    std::string kind;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<OracleRow> rows;

    bool all_match() const
    {
        for (const auto &r : rows) {
            if (!r.match()) {
                return false;
            }
        }
        return true;
    }
};

// "(a,b,c)".
template <typename Seq>
std::string tuple_text(const Seq &seq)
{
    std::string s = "(";
    bool first = true;
    for (const auto &v : seq) {
        s += (first ? "" : ",") + std::to_string(v);
        first = false;
    }
    return s + ")";
}

} // namespace lagrange_kit

#endif
