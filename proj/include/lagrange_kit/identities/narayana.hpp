#ifndef LAGRANGE_KIT_IDENTITIES_NARAYANA_HPP
#define LAGRANGE_KIT_IDENTITIES_NARAYANA_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <lagrange_kit/identities/common.hpp>
#include <lagrange_kit/multipoly.hpp>
#include <lagrange_kit/scalar.hpp>

namespace lagrange_kit
{

namespace detail
{

using Exponents = std::vector<unsigned>;

// Every exponent vector of the given length with entry sum <= total.
inline void for_each_exponent(std::size_t length, int total, const std::function<void(const Exponents &)> &visit)
{
    Exponents e(length, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos == length) {
            visit(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = static_cast<unsigned>(v);
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
}

inline std::map<std::string, unsigned> exponent_map(const std::vector<std::string> &names, const Exponents &e)
{
    std::map<std::string, unsigned> m;
    for (std::size_t t = 0; t < names.size(); ++t) {
        m[names[t]] = e[t];
    }
    return m;
}

inline std::string exponent_text(const Exponents &e)
{
    std::string s = "(";
    for (std::size_t t = 0; t < e.size(); ++t) {
        s += (t ? "," : "") + std::to_string(e[t]);
    }
    return s + ")";
}

} // namespace detail

// Variable names x1, x2, ... for a profile of the given size; two or three
// variables read as x, y, z.
inline std::vector<std::string> profile_variables(std::size_t m)
{
    static const std::vector<std::string> short_names{"x", "y", "z"};
    std::vector<std::string> names;
    for (std::size_t t = 0; t < m; ++t) {
        names.push_back(m <= 3 ? short_names[t] : "x" + std::to_string(t + 1));
    }
    return names;
}

// Coefficients r_0 .. r_degree of R(t) = prod_t (1 + x_t t)^{e_t}; a negative
// exponent e_t = -s stands for the factor 1/(1 - x_t t)^s.
inline std::vector<MultiPoly> narayana_kernel(const std::vector<long> &profile, int degree)
{
    const auto names = profile_variables(profile.size());
    const auto gens = MultiPoly::generators(names);
    std::vector<MultiPoly> r(static_cast<std::size_t>(degree + 1));
    r[0] = MultiPoly(Rational(1));
    for (std::size_t t = 0; t < profile.size(); ++t) {
        const long e = profile[t];
        std::vector<MultiPoly> factor;
        for (int i = 0; i <= degree; ++i) {
            const Rational c = e >= 0 ? binom(e, i) : binom(-e + i - 1, i);
            factor.push_back(power(gens[t], i) * c);
        }
        std::vector<MultiPoly> next(r.size());
        for (int a = 0; a <= degree; ++a) {
            for (int b = 0; a + b <= degree; ++b) {
                if (!r[static_cast<std::size_t>(a)].is_zero() && !factor[static_cast<std::size_t>(b)].is_zero()) {
                    next[static_cast<std::size_t>(a + b)] += r[static_cast<std::size_t>(a)] * factor[static_cast<std::size_t>(b)];
                }
            }
        }
        r = std::move(next);
    }
    return r;
}

// (k/n) prod_t c_t(i_t) with n = k + sum i; c_t(i) = binom(e_t n, i) for
// e_t >= 0 and binom(s_t n + i - 1, i) for e_t = -s_t.
inline Rational fuss_narayana_coefficient(const std::vector<long> &profile, const detail::Exponents &i, long k)
{
    long n = k;
    for (unsigned v : i) {
        n += v;
    }
    if (n == 0) {
        return Rational(1);
    }
    Rational c(k, n);
    for (std::size_t t = 0; t < profile.size(); ++t) {
        const long e = profile[t];
        const long it = i[t];
        c *= e >= 0 ? binom(e * n, it) : binom(-e * n + it - 1, it);
    }
    return c;
}

namespace detail
{

inline void fuss_narayana_checks(ReportBuilder &rb, const std::vector<long> &profile, IntRange k_range, int degree)
{
    const auto names = profile_variables(profile.size());
    const MultiPoly f = solve_indeterminate(narayana_kernel(profile, degree), degree);
    for (long k = k_range.lo; k <= k_range.hi && !rb.failed(); ++k) {
        const MultiPoly fk = power_truncated(f, static_cast<int>(k), degree);
        for_each_exponent(profile.size(), degree, [&](const Exponents &e) {
            if (rb.failed()) {
                return;
            }
            rb.equal(fk.coefficient(exponent_map(names, e)), fuss_narayana_coefficient(profile, e, k),
                     [&] { return "f^" + std::to_string(k) + " at " + exponent_text(e); });
        });
    }
}

} // namespace detail

inline Rational narayana_number(long n, long i)
{
    if (n <= 0) {
        return Rational(0);
    }
    return Rational(1, n) * binom(n, i) * binom(n, i - 1);
}

// f = (1+xf)(1+yf) through total degree `degree`: powers f^k, Narayana
// numbers and their symmetry, the quadratic xy f^2 + (x+y-1) f + 1 = 0, and
// the three-variable equation f = (1+xf)(1+yf)/(1-zf).
inline IdentityReport check_narayana_suite(IntRange k_range, int degree)
{
    ReportBuilder rb("narayana", degree);
    rb.param("k", range_text(k_range));
    rb.guarded([&] {
        const auto gens = MultiPoly::generators({"x", "y", "z"});
        const MultiPoly &x = gens[0], &y = gens[1], &z = gens[2];
        const MultiPoly one(Rational(1));
        const MultiPoly f = solve_indeterminate({one, x + y, x * y}, degree);
        rb.equal(f.truncated(1), one + x + y, [] { return "low terms"; });

        detail::fuss_narayana_checks(rb, {1, 1}, k_range, degree);

        for (long n = 1; n <= degree + 1; ++n) {
            for (long i = 1; i <= n; ++i) {
                const Rational got = f.coefficient({{"x", static_cast<unsigned>(i - 1)}, {"y", static_cast<unsigned>(n - i)}});
                rb.equal(got, narayana_number(n, i), [&] { return at({{"n", n}, {"i", i}}, "narayana "); });
                rb.equal(narayana_number(n, i), narayana_number(n, n + 1 - i),
                         [&] { return at({{"n", n}, {"i", i}}, "symmetry "); });
            }
        }

        const MultiPoly quad = MultiPoly::multiply(x * y, MultiPoly::multiply(f, f, degree), degree) +
                               MultiPoly::multiply(x + y - one, f, degree) + one;
        rb.check(quad.truncated(degree).is_zero(), [&] { return "quadratic residue " + quad.truncated(degree).to_string(); });

        const int small = std::min(degree, 6);
        const MultiPoly g = solve_indeterminate(narayana_kernel({1, 1, -1}, small), small);
        const MultiPoly quad3 = MultiPoly::multiply(x * y + z, MultiPoly::multiply(g, g, small), small) +
                                MultiPoly::multiply(x + y - one, g, small) + one;
        rb.check(quad3.truncated(small).is_zero(), [&] { return "three-variable quadratic residue"; });
        detail::fuss_narayana_checks(rb, {1, 1, -1}, k_range, small);
    });
    return rb.finish();
}

// f = prod (1 + x_t f)^{e_t} (negative e_t in the 1/(1 - x_t f)^{s_t} form):
// every coefficient of f^k through total degree `degree` against the product formula.
inline IdentityReport check_fuss_narayana(const std::vector<long> &profile, IntRange k_range, int degree)
{
    ReportBuilder rb("fuss-narayana", degree);
    std::string text;
    for (long e : profile) {
        text += (text.empty() ? "" : ",") + std::to_string(e);
    }
    rb.param("r", text).param("k", range_text(k_range));
    if (profile.empty() || profile.size() > 3) {
        throw InvalidArgument("fuss-narayana takes 1 to 3 exponents");
    }
    rb.guarded([&] { detail::fuss_narayana_checks(rb, profile, k_range, degree); });
    return rb.finish();
}

// (1+a)^r (1+b)^s / (1-ab)^{r+s+1} = sum binom(r+j, i) binom(s+i, j) a^i b^j
// through bidegree N, and through total degree N from the solution of
// f = 1 + a + abf.
inline IdentityReport check_rational_expansion(IntRange r_range, IntRange s_range, int N)
{
    ReportBuilder rb("rational-expansion", N);
    rb.param("r", range_text(r_range)).param("s", range_text(s_range));
    if (r_range.lo < 0 || s_range.lo < 0) {
        throw InvalidArgument("rational-expansion needs r, s >= 0");
    }
    rb.guarded([&] {
        const auto gens = MultiPoly::generators({"a", "b"});
        const MultiPoly &a = gens[0], &b = gens[1];
        const MultiPoly one(Rational(1));
        const MultiPoly f = solve_indeterminate({one + a, a * b}, N);
        MultiPoly geometric;
        for (int n = 0; 2 * n <= N; ++n) {
            geometric += power(a * b, n);
        }
        rb.equal(f, (((one + a) * geometric).truncated(N)), [] { return "f = (1+a)/(1-ab)"; });

        for (long r = r_range.lo; r <= r_range.hi && !rb.failed(); ++r) {
            for (long s = s_range.lo; s <= s_range.hi && !rb.failed(); ++s) {
                MultiPoly tail;
                for (int n = 0; n <= N; ++n) {
                    tail += power(a * b, n) * binom(r + s + n, n);
                }
                const MultiPoly closed =
                    (power(one + a, r) * power(one + b, s) * tail).truncated_each(static_cast<unsigned>(N));
                MultiPoly sum;
                for (long i = 0; i <= N; ++i) {
                    for (long j = 0; j <= N; ++j) {
                        sum += power(a, i) * power(b, j) * (binom(r + j, i) * binom(s + i, j));
                    }
                }
                rb.equal(closed, sum, [&] { return at({{"r", r}, {"s", s}}, "bidegree expansion "); });

                // psi(f) / (1 - R'(f)) with psi(t) = t^r (1+bt)^s.
                MultiPoly inv_weight;
                for (int n = 0; 2 * n <= N; ++n) {
                    inv_weight += power(a * b, n);
                }
                const MultiPoly lagrange = MultiPoly::multiply(
                    MultiPoly::multiply(power_truncated(f, static_cast<int>(r), N),
                                        power_truncated(one + MultiPoly::multiply(b, f, N), static_cast<int>(s), N), N),
                    inv_weight, N);
                rb.equal(lagrange, sum.truncated(N), [&] { return at({{"r", r}, {"s", s}}, "lagrange form "); });
            }
        }
    });
    return rb.finish();
}

} // namespace lagrange_kit

#endif
