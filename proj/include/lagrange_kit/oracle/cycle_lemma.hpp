#ifndef LAGRANGE_KIT_ORACLE_CYCLE_LEMMA_HPP
#define LAGRANGE_KIT_ORACLE_CYCLE_LEMMA_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/oracle/table.hpp>

namespace lagrange_kit
{

inline constexpr int cycle_lemma_length_limit = 12;

// Number of rotations a_i ... a_n a_1 ... a_{i-1} with every partial sum negative.
inline long cycle_lemma_count(const std::vector<int> &seq)
{
    long sum = 0;
    for (int a : seq) {
        if (a < -1) {
            throw BadSequence("entry " + std::to_string(a) + " is below -1");
        }
        sum += a;
    }
    if (seq.empty() || sum >= 0) {
        throw BadSequence("sequence sum " + std::to_string(sum) + " is not negative");
    }
    const std::size_t n = seq.size();
    long good = 0;
    for (std::size_t start = 0; start < n; ++start) {
        long partial = 0;
        bool ok = true;
        for (std::size_t t = 0; t < n && ok; ++t) {
            partial += seq[(start + t) % n];
            ok = partial < 0;
        }
        good += ok ? 1 : 0;
    }
    return good;
}

// Every sequence over the alphabet of length 1..max_len with negative sum;
// rows are grouped by (length, k) with the number of sequences as the formula
// side and the number whose rotation count equals k as the oracle side.
inline OracleTable cycle_lemma_table(const std::vector<int> &alphabet, int max_len)
{
    if (max_len > cycle_lemma_length_limit) {
        throw SizeLimit("cycle lemma sweep is limited to length " + std::to_string(cycle_lemma_length_limit));
    }
    for (int a : alphabet) {
        if (a < -1) {
            throw BadSequence("alphabet entry " + std::to_string(a) + " is below -1");
        }
    }
    OracleTable table{"cycle-lemma", {{"alphabet", tuple_text(alphabet)}, {"len", std::to_string(max_len)}}, {}};
    std::vector<int> seq;
    for (int len = 1; len <= max_len; ++len) {
        std::map<long, std::pair<long, long>> by_k; // k -> (sequences, with count k)
        seq.assign(static_cast<std::size_t>(len), 0);
        std::function<void(int, long)> rec = [&](int pos, long sum) {
            if (pos == len) {
                if (sum < 0) {
                    auto &slot = by_k[-sum];
                    ++slot.first;
                    slot.second += cycle_lemma_count(seq) == -sum ? 1 : 0;
                }
                return;
            }
            for (int a : alphabet) {
                seq[static_cast<std::size_t>(pos)] = a;
                rec(pos + 1, sum + a);
            }
        };
        rec(0, 0);
        for (const auto &[k, counts] : by_k) {
            table.rows.push_back({"len=" + std::to_string(len) + " k=" + std::to_string(k), Integer(counts.second),
                                  Rational(counts.first)});
        }
    }
    return table;
}

} // namespace lagrange_kit

#endif
