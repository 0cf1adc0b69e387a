#ifndef LAGRANGE_KIT_LAGRANGE_EXPLICIT_HPP
#define LAGRANGE_KIT_LAGRANGE_EXPLICIT_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/rational.hpp>
#include <lagrange_kit/scalar.hpp>

namespace lagrange_kit
{

namespace detail
{

// Calls visit(counts) for every vector counts[lo..hi] of nonnegative integers
// with sum_i (i - shift) * counts[i] == weight; counts below lo stay zero.
inline void for_each_weighted_profile(int lo, int hi, int shift, int weight,
                                      const std::function<void(const std::vector<long> &)> &visit)
{
    std::vector<long> counts(static_cast<std::size_t>(hi + 1), 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i > hi) {
            if (remaining == 0) {
                visit(counts);
            }
            return;
        }
        const int w = i - shift;
        if (w == 0) {
            throw InvalidArgument("zero weight part");
        }
        for (long c = 0; c * w <= remaining; ++c) {
            counts[static_cast<std::size_t>(i)] = c;
            rec(i + 1, remaining - static_cast<int>(c * w));
        }
        counts[static_cast<std::size_t>(i)] = 0;
    };
    if (weight >= 0) {
        rec(lo, weight);
    }
}

} // namespace detail

// [x^n] f^k for f = x R(f), R = sum r_i t^i with r listing every nonzero
// coefficient, summed over child-count profiles:
// sum k (n-1)! / (n_0! n_1! ...) r_0^{n_0} r_1^{n_1} ...,
// n_0 + n_1 + ... = n, n_1 + 2 n_2 + ... = n - k.
template <CoefficientRing S>
S explicit_coefficient(const std::vector<S> &r, int n, int k)
{
    if (n <= 0) {
        throw InvalidArgument("explicit coefficient needs n >= 1");
    }
    S total(Rational(0));
    const int top = std::min(n - k, static_cast<int>(r.size()) - 1);
    if (top < 0) {
        return total;
    }
    if (top == 0) {
        // Only n_0 = n, which needs n = k.
        return n == k ? power(r[0], n) : total;
    }
    const Integer nf = factorial(n - 1);
    detail::for_each_weighted_profile(1, top, 0, n - k, [&](const std::vector<long> &counts) {
        long used = 0;
        for (long c : counts) {
            used += c;
        }
        const long n0 = n - used;
        if (n0 < 0) {
            return;
        }
        Integer denom = factorial(n0);
        S term = power(r[0], n0);
        for (int i = 1; i <= top; ++i) {
            const long c = counts[static_cast<std::size_t>(i)];
            if (c > 0) {
                denom *= factorial(c);
                term = term * power(r[static_cast<std::size_t>(i)], c);
            }
        }
        total = total + term * (Rational(nf, denom) * Rational(k));
    });
    return total;
}

// [x^m] f^k where f is the compositional inverse of g = x - g_2 x^2 - g_3 x^3 - ...
// given as the coefficient list of g (g[0] = 0, g[1] = 1):
// sum k (n-1)! / (m! n_2! n_3! ...) g_2^{n_2} ..., over n_2 + n_3 + ... = n - m
// and n_2 + 2 n_3 + ... = m - k.
template <CoefficientRing S>
S explicit_from_inverse(const std::vector<S> &g, int m, int k)
{
    if (g.size() < 2 || !g[0].is_zero() || !(g[1] == S(Rational(1)))) {
        throw InvalidArgument("g must start x + ...");
    }
    if (m <= 0) {
        throw InvalidArgument("explicit coefficient needs m >= 1");
    }
    S total(Rational(0));
    if (m - k < 0) {
        return total;
    }
    const int top = std::min(m - k + 1, static_cast<int>(g.size()) - 1);
    if (top < 2) {
        return m == k ? S(Rational(1)) : total;
    }
    const Integer mf = factorial(m);
    detail::for_each_weighted_profile(2, top, 1, m - k, [&](const std::vector<long> &counts) {
        long used = 0;
        for (long c : counts) {
            used += c;
        }
        const long n = m + used;
        Integer denom = mf;
        S term(Rational(1));
        for (int i = 2; i <= top; ++i) {
            const long c = counts[static_cast<std::size_t>(i)];
            if (c > 0) {
                denom *= factorial(c);
                term = term * power(-g[static_cast<std::size_t>(i)], c);
            }
        }
        total = total + term * (Rational(factorial(n - 1), denom) * Rational(k));
    });
    return total;
}

// Coefficient of A_1^{i_1} A_2^{i_2} ... B_1^{j_1} B_2^{j_2} ... in f^k, where
// f = sum_t A_t e^{B_t f}:
// k (sum i - 1)! / prod i_t! * prod i_t^{j_t} / j_t!  when sum i = k + sum j, else 0.
inline Rational raney_coefficient(const std::vector<long> &i, const std::vector<long> &j, long k)
{
    if (k < 1) {
        throw InvalidArgument("Raney coefficient needs k >= 1");
    }
    long si = 0, sj = 0;
    for (long v : i) {
        if (v < 0) {
            throw InvalidArgument("negative exponent in profile");
        }
        si += v;
    }
    for (long v : j) {
        if (v < 0) {
            throw InvalidArgument("negative exponent in profile");
        }
        sj += v;
    }
    if (si != k + sj) {
        return Rational(0);
    }
    Rational r(Integer(k) * factorial(si - 1));
    const std::size_t width = std::max(i.size(), j.size());
    for (std::size_t t = 0; t < width; ++t) {
        const long it = t < i.size() ? i[t] : 0;
        const long jt = t < j.size() ? j[t] : 0;
        r = r / Rational(factorial(it)) * pow(Rational(it), jt) / Rational(factorial(jt));
    }
    return r;
}

} // namespace lagrange_kit

#endif
