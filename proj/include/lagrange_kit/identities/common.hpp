#ifndef LAGRANGE_KIT_IDENTITIES_COMMON_HPP
#define LAGRANGE_KIT_IDENTITIES_COMMON_HPP

#include <string>
#include <vector>

#include <lagrange_kit/identities/report.hpp>
#include <lagrange_kit/lagrange/solve.hpp>
#include <lagrange_kit/power_series.hpp>
#include <lagrange_kit/rational.hpp>
#include <lagrange_kit/series_functions.hpp>

namespace lagrange_kit
{

using Series = PowerSeries<Rational>;

inline Rational binom(long a, long k)
{
    return Rational(binomial(a, k));
}

// [x^n] c_p(x)^k in the form that is valid for every integer k:
// 1 at n = 0, otherwise (k/n) binom(pn+k-1, n-1).
inline Rational fuss_ballot(long p, long n, long k)
{
    if (n == 0) {
        return Rational(1);
    }
    return Rational(k, n) * binom(p * n + k - 1, n - 1);
}

// c_p(x) through x^{order-1}, from c_p - 1 = x (1 + (c_p - 1))^p.
inline Series fuss_catalan_series(long p, int order)
{
    std::vector<Rational> r;
    for (int i = 0; i < order; ++i) {
        r.push_back(binom(p, i));
    }
    const Series f = solve_xr(Series(r, order), order);
    return Series::one(order) + f;
}

// 1 / n! as a rational.
inline Rational inv_factorial(long n)
{
    return Rational(Integer(1), factorial(n));
}

// Series with coefficients term(n), n < order.
template <typename Term>
Series series_from(int order, Term &&term)
{
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(order));
    for (int n = 0; n < order; ++n) {
        c.push_back(term(n));
    }
    return Series(std::move(c), order);
}

// Coefficientwise comparison; records the first differing index.
inline bool same_series(ReportBuilder &rb, const Series &got, const Series &expected, const std::string &label)
{
    const int order = std::min(got.order(), expected.order());
    for (int n = 0; n < order; ++n) {
        if (!rb.equal(got[n], expected[n], [&] { return label + " at x^" + std::to_string(n); })) {
            return false;
        }
    }
    return true;
}

// (1 + c x)^e as a series; e any integer.
inline Series binomial_series(const Rational &c, long e, int order)
{
    return series_from(order, [&](int n) { return binom(e, n) * pow(c, n); });
}

} // namespace lagrange_kit

#endif
