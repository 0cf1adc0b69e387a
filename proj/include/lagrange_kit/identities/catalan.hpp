#ifndef LAGRANGE_KIT_IDENTITIES_CATALAN_HPP
#define LAGRANGE_KIT_IDENTITIES_CATALAN_HPP

#include <string>

#include <lagrange_kit/identities/common.hpp>

namespace lagrange_kit
{

// Coefficients of c(x)^k for k in k_range against the ballot formulas, the
// central binomial expansions of c^k / sqrt(1-4x) and log c, and the two
// convolutions, all for n < order.
inline IdentityReport check_catalan_suite(IntRange k_range, int order)
{
    ReportBuilder rb("catalan", order);
    rb.param("k", range_text(k_range));
    rb.guarded([&] {
        const Series c = fuss_catalan_series(2, order);
        const Series root = pow(binomial_series(Rational(-4), 1, order), Rational(1, 2));

        for (long k = k_range.lo; k <= k_range.hi && !rb.failed(); ++k) {
            const Series ck = pow(c, k);
            for (long n = 0; n < order; ++n) {
                const auto where = [&](const char *form) { return at({{"k", k}, {"n", n}}, std::string(form) + " "); };
                const Rational got = ck[static_cast<int>(n)];
                const Rational first = n == 0 ? Rational(1) : Rational(k, n) * binom(2 * n + k - 1, n - 1);
                rb.equal(got, first, [&] { return where("ballot"); });
                if (2 * n + k != 0) {
                    rb.equal(got, Rational(k, 2 * n + k) * binom(2 * n + k, n), [&] { return where("ballot/(2n+k)"); });
                }
                if (n + k != 0) {
                    rb.equal(got, Rational(k, n + k) * binom(2 * n + k - 1, n), [&] { return where("ballot/(n+k)"); });
                }
                rb.equal(got, binom(2 * n + k - 1, n) - binom(2 * n + k - 1, n - 1),
                         [&] { return where("binomial difference"); });
                rb.equal(got, binom(2 * n + k, n) - Rational(2) * binom(2 * n + k - 1, n - 1),
                         [&] { return where("shifted binomial difference"); });
            }

            same_series(rb, ck / root, series_from(order, [&](int n) { return binom(2 * n + k, n); }),
                        "c^k/sqrt(1-4x) k=" + std::to_string(k));
        }

        same_series(rb, log(c), series_from(order, [](int m) {
                        return m == 0 ? Rational(0) : Rational(1, 2 * m) * binom(2 * m, m);
                    }),
                    "log c");

        // Convolutions as polynomial identities in (k, l); the ballot form
        // is used so that no index is excluded.
        for (long k = k_range.lo; k <= k_range.hi && !rb.failed(); ++k) {
            for (long l = k_range.lo; l <= k_range.hi && !rb.failed(); ++l) {
                for (long n = 0; n < order; ++n) {
                    Rational ballot_sum, mixed_sum;
                    for (long i = 0; i <= n; ++i) {
                        ballot_sum += fuss_ballot(2, i, k) * fuss_ballot(2, n - i, l);
                        mixed_sum += fuss_ballot(2, i, k) * binom(2 * (n - i) + l, n - i);
                    }
                    rb.equal(ballot_sum, fuss_ballot(2, n, k + l),
                             [&] { return at({{"k", k}, {"l", l}, {"n", n}}, "ballot convolution "); });
                    rb.equal(mixed_sum, binom(2 * n + k + l, n),
                             [&] { return at({{"k", k}, {"l", l}, {"n", n}}, "mixed convolution "); });
                }
            }
        }
    });
    return rb.finish();
}

} // namespace lagrange_kit

#endif
