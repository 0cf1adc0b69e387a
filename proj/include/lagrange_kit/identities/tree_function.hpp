#ifndef LAGRANGE_KIT_IDENTITIES_TREE_FUNCTION_HPP
#define LAGRANGE_KIT_IDENTITIES_TREE_FUNCTION_HPP

#include <algorithm>
#include <string>

#include <lagrange_kit/identities/common.hpp>

namespace lagrange_kit
{

// T = x e^T through x^{order-1}.
inline Series tree_function(int order)
{
    return solve_xr(series_from(order, [](int n) { return inv_factorial(n); }), order);
}

// k (i+k)^{i-1} read as a polynomial in k: the i = 0 value is 1.
inline Rational forest_weight(long i, const Rational &k)
{
    if (i == 0) {
        return Rational(1);
    }
    return k * pow(k + Rational(i), i - 1);
}

// EGF sum_n w(n) x^n / n!.
template <typename Weight>
Series egf(int order, Weight &&w)
{
    return series_from(order, [&](int n) { return w(n) * inv_factorial(n); });
}

inline void lacasse_checks(ReportBuilder &rb, const Series &T)
{
    const int order = T.order();
    const Series one = Series::one(order);
    const Series u = egf(order, [](long n) { return pow(Rational(n), n); });
    same_series(rb, u, (one - T).inverse(), "U = 1/(1-T)");
    const Series lhs = u * u * u - u * u;
    const Series middle = egf(order, [](long n) { return pow(Rational(n), n + 1); });
    same_series(rb, lhs, middle, "U^3 - U^2");
    same_series(rb, middle, T * pow(one - T, -3), "T/(1-T)^3");
}

// Both forest convolutions on the (k, l) grid for n <= n_max.
inline void forest_convolutions(ReportBuilder &rb, IntRange k_range, long n_max)
{
    for (long k = k_range.lo; k <= k_range.hi; ++k) {
        for (long l = k_range.lo; l <= k_range.hi; ++l) {
            for (long n = 0; n <= n_max; ++n) {
                Rational with_power, both;
                for (long i = 0; i <= n; ++i) {
                    const Rational b = binom(n, i) * forest_weight(i, Rational(k));
                    with_power += b * pow(Rational(n - i + l), n - i);
                    both += b * forest_weight(n - i, Rational(l));
                }
                const auto where = [&](const char *what) {
                    return at({{"k", k}, {"l", l}, {"n", n}}, std::string(what) + " ");
                };
                if (!rb.equal(with_power, pow(Rational(n + k + l), n), [&] { return where("forest-power convolution"); }) ||
                    !rb.equal(both, forest_weight(n, Rational(k + l)), [&] { return where("forest convolution"); })) {
                    return;
                }
            }
        }
    }
}

inline Rational abel_right(long n, const Rational &x, const Rational &y, const Rational &z)
{
    Rational s = pow(y, n);
    for (long i = 1; i <= n; ++i) {
        s += binom(n, i) * x * pow(x + Rational(i) * z, i - 1) * pow(y - Rational(i) * z, n - i);
    }
    return s;
}

inline void abel_grid(ReportBuilder &rb, IntRange xy_range, IntRange z_range, long n_max)
{
    for (long x = xy_range.lo; x <= xy_range.hi; ++x) {
        for (long y = xy_range.lo; y <= xy_range.hi; ++y) {
            for (long z = z_range.lo; z <= z_range.hi; ++z) {
                for (long n = 0; n <= n_max; ++n) {
                    if (!rb.equal(abel_right(n, x, y, z), pow(Rational(x + y), n),
                                  [&] { return at({{"x", x}, {"y", y}, {"z", z}, {"n", n}}, "abel "); })) {
                        return;
                    }
                }
            }
        }
    }
}

// Tree and forest series: T, T^k/k!, F^k = e^{kT}, the prime parking form of
// F, F^k/(1-T), Lacasse's identity, both convolutions and Abel's identity.
inline IdentityReport check_tree_function_suite(IntRange k_range, int order)
{
    ReportBuilder rb("tree-function", order);
    rb.param("k", range_text(k_range));
    rb.guarded([&] {
        const Series T = tree_function(order);
        const Series one = Series::one(order);
        const Series F = exp(T);
        same_series(rb, T, egf(order, [](long n) { return n == 0 ? Rational(0) : pow(Rational(n), n - 1); }),
                    "T coefficients");
        same_series(rb, T, Series::x(order) * F, "T = x e^T");
        same_series(rb, F,
                    (one - egf(order, [](long n) { return n == 0 ? Rational(0) : pow(Rational(n - 1), n - 1); }))
                        .inverse(),
                    "prime parking");

        for (long k = k_range.lo; k <= k_range.hi && !rb.failed(); ++k) {
            const std::string tag = " k=" + std::to_string(k);
            if (k >= 1) {
                same_series(rb, pow(T, k) * inv_factorial(k), egf(order, [&](long n) {
                                return Rational(k) * (n == 0 ? Rational(0) : pow(Rational(n), n - k - 1)) *
                                       binom(n, k);
                            }),
                            "T^k/k!" + tag);
            }
            const Series Fk = pow(F, k);
            same_series(rb, Fk, egf(order, [&](long n) { return forest_weight(n, Rational(k)); }), "F^k" + tag);
            same_series(rb, Fk / (one - T), egf(order, [&](long n) { return pow(Rational(n + k), n); }),
                        "F^k/(1-T)" + tag);
        }

        lacasse_checks(rb, T.truncated(std::min(order, 21)));
        forest_convolutions(rb, k_range, std::min<long>(order - 1, 8));
        abel_grid(rb, {-3, 3}, {-2, 2}, std::min<long>(order - 1, 8));
    });
    return rb.finish();
}

inline IdentityReport check_lacasse(int order)
{
    ReportBuilder rb("lacasse", order);
    rb.guarded([&] { lacasse_checks(rb, tree_function(order)); });
    return rb.finish();
}

// Abel's identity at every integer point of the grid; x and y share xy_range.
inline IdentityReport check_abel(IntRange xy_range, IntRange z_range, long n_max)
{
    ReportBuilder rb("abel", static_cast<int>(n_max + 1));
    rb.param("xy", range_text(xy_range)).param("z", range_text(z_range)).param("n_max", n_max);
    abel_grid(rb, xy_range, z_range, n_max);
    return rb.finish();
}

} // namespace lagrange_kit

#endif
