#ifndef LAGRANGE_KIT_IDENTITIES_RESIDUES_HPP
#define LAGRANGE_KIT_IDENTITIES_RESIDUES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <lagrange_kit/identities/common.hpp>
#include <lagrange_kit/identities/narayana.hpp>
#include <lagrange_kit/lagrange/explicit.hpp>
#include <lagrange_kit/lagrange/forms.hpp>
#include <lagrange_kit/random.hpp>

namespace lagrange_kit
{

// f = A1 e^{B1 f} + A2 e^{B2 f} solved over polynomials in A1, A2, B1, B2;
// every coefficient of f^k with sum i <= i_max against Raney's formula.
inline IdentityReport check_raney(long i_max, IntRange k_range)
{
    const int degree = static_cast<int>(2 * i_max - 1);
    ReportBuilder rb("raney", degree);
    rb.param("i_max", i_max).param("k", range_text(k_range));
    if (k_range.lo < 1 || i_max < 1) {
        throw InvalidArgument("raney needs k >= 1 and i_max >= 1");
    }
    rb.guarded([&] {
        const std::vector<std::string> names{"A1", "A2", "B1", "B2"};
        const auto g = MultiPoly::generators(names);
        // r_n = sum_t A_t B_t^n / n!, of total degree n + 1.
        std::vector<MultiPoly> r;
        for (int n = 0; n < degree; ++n) {
            r.push_back((g[0] * power(g[2], n) + g[1] * power(g[3], n)) * inv_factorial(n));
        }
        const MultiPoly f = solve_indeterminate(r, degree);
        for (long k = k_range.lo; k <= k_range.hi && !rb.failed(); ++k) {
            const MultiPoly fk = power_truncated(f, static_cast<int>(k), degree);
            detail::for_each_exponent(4, degree, [&](const detail::Exponents &e) {
                if (rb.failed() || static_cast<long>(e[0] + e[1]) > i_max) {
                    return;
                }
                const Rational expected = raney_coefficient({long(e[0]), long(e[1])}, {long(e[2]), long(e[3])}, k);
                rb.equal(fk.coefficient(detail::exponent_map(names, e)), expected,
                         [&] { return "f^" + std::to_string(k) + " at " + detail::exponent_text(e); });
            });
        }
    });
    return rb.finish();
}

// [x^n] f^k = (k/n) [x^{-k}] g^{-n} for `count` random f, |n|, |k| <= bound,
// n != 0, plus f = x c(x) with inverse x - x^2.
inline IdentityReport check_schur_jabotinsky(int count, long bound, std::uint64_t seed)
{
    const int order = static_cast<int>(2 * bound + 4);
    ReportBuilder rb("schur-jabotinsky", order);
    rb.param("count", count).param("bound", bound).param("seed", seed);
    rb.guarded([&] {
        std::mt19937_64 rng(seed);
        std::vector<Series> fs;
        fs.push_back(Series::x(order) * fuss_catalan_series(2, order));
        for (int t = 0; t < count; ++t) {
            fs.push_back(random_reversible(rng, order, 5, false));
        }
        same_series(rb, reversion(fs.front()), Series::x(order) - Series::monomial(Rational(1), 2, order),
                    "inverse of x c(x)");
        for (std::size_t t = 0; t < fs.size() && !rb.failed(); ++t) {
            for (long n = -bound; n <= bound; ++n) {
                for (long k = -bound; k <= bound && n != 0; ++k) {
                    const auto r = schur_jabotinsky_check(fs[t], static_cast<int>(n), static_cast<int>(k));
                    rb.equal(r.lhs, r.rhs,
                             [&] { return at({{"f", static_cast<long>(t)}, {"n", n}, {"k", k}}); });
                }
            }
        }
    });
    return rb.finish();
}

// residue((1 - e^{-x})^{-n}) = 1, i.e. [x^{n-1}] (x/(1-e^{-x}))^n = 1; and
// res a(g) g' = res a for random Laurent a and reversible g.
inline IdentityReport check_hirzebruch_residue(long n_max, int pairs, std::uint64_t seed)
{
    const int order = static_cast<int>(n_max + 4);
    ReportBuilder rb("hirzebruch-residue", order);
    rb.param("n_max", n_max).param("pairs", pairs).param("seed", seed);
    rb.guarded([&] {
        using Laurent = LaurentSeries<Rational>;
        const Laurent denominator(Series::one(order) - exp(-Series::x(order)));
        for (long n = 1; n <= n_max; ++n) {
            rb.equal(denominator.pow(-n).residue(), Rational(1), [&] { return at({{"n", n}}); });
        }
        std::mt19937_64 rng(seed);
        for (int t = 0; t < pairs; ++t) {
            const Laurent a = random_laurent(rng, -4, 6, 15);
            const Series g = random_reversible(rng, 15, 14, false);
            const Laurent pulled = compose(a, g) * Laurent(g.derivative());
            rb.equal(pulled.residue(), a.residue(), [&] { return at({{"pair", t}}, "change of variables "); });
        }
    });
    return rb.finish();
}

} // namespace lagrange_kit

#endif
