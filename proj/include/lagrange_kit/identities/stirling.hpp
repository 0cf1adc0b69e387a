#ifndef LAGRANGE_KIT_IDENTITIES_STIRLING_HPP
#define LAGRANGE_KIT_IDENTITIES_STIRLING_HPP

#include <random>
#include <string>
#include <vector>

#include <lagrange_kit/format.hpp>
#include <lagrange_kit/identities/tree_function.hpp>
#include <lagrange_kit/multipoly.hpp>
#include <lagrange_kit/scalar.hpp>

namespace lagrange_kit
{

// R(n, j, k) = (1/j!) sum_i (-1)^{j-i} binom(j, i) (k+i)^n.
inline Rational weighted_stirling(long n, long j, const Rational &k)
{
    if (n < 0 || j < 0) {
        throw InvalidArgument("weighted Stirling numbers need n, j >= 0");
    }
    Rational s;
    for (long i = 0; i <= j; ++i) {
        const Rational term = binom(j, i) * pow(k + Rational(i), n);
        s += (j - i) % 2 == 0 ? term : -term;
    }
    return s * inv_factorial(j);
}

// Same, as a polynomial in the variable "k".
inline MultiPoly weighted_stirling_poly(long n, long j)
{
    const MultiPoly k = MultiPoly::variable("k");
    MultiPoly s;
    for (long i = 0; i <= j; ++i) {
        const MultiPoly term = power(k + MultiPoly(Rational(i)), n) * binom(j, i);
        s += (j - i) % 2 == 0 ? term : -term;
    }
    return s * inv_factorial(j);
}

// Ordinary Stirling numbers of the second kind by the triangle recurrence.
inline Rational stirling2(long n, long j)
{
    std::vector<Rational> row{Rational(1)};
    for (long m = 1; m <= n; ++m) {
        std::vector<Rational> next(static_cast<std::size_t>(m + 1));
        for (long t = 1; t <= m; ++t) {
            const Rational keep = t < m ? row[static_cast<std::size_t>(t)] * Rational(t) : Rational(0);
            next[static_cast<std::size_t>(t)] = keep + row[static_cast<std::size_t>(t - 1)];
        }
        row = std::move(next);
    }
    return j >= 0 && j <= n ? row[static_cast<std::size_t>(j)] : Rational(0);
}

// EGF of R(., j, k) against e^{kx} (e^x - 1)^j / j!, at integer k and with
// k as a polynomial parameter; plus R(n, j, 0) = S(n, j).
inline IdentityReport check_ws_egf(IntRange j_range, IntRange k_range, int order)
{
    ReportBuilder rb("weighted-stirling", order);
    rb.param("j", range_text(j_range)).param("k", range_text(k_range));
    rb.guarded([&] {
        const Series e1 = exp(Series::x(order)) - Series::one(order);
        for (long j = j_range.lo; j <= j_range.hi && !rb.failed(); ++j) {
            const Series tail = pow(e1, j) * inv_factorial(j);
            for (long k = k_range.lo; k <= k_range.hi && !rb.failed(); ++k) {
                same_series(rb, egf(order, [&](long n) { return weighted_stirling(n, j, Rational(k)); }),
                            exp(Series::x(order) * Rational(k)) * tail,
                            at({{"j", j}, {"k", k}}, "egf "));
            }
            for (long n = 0; n < order; ++n) {
                rb.equal(weighted_stirling(n, j, Rational(0)), stirling2(n, j),
                         [&] { return at({{"n", n}, {"j", j}}, "k=0 "); });
            }

            // Parameter version: e^{kx} with polynomial coefficients k^n/n!.
            const MultiPoly k = MultiPoly::variable("k");
            std::vector<MultiPoly> ekx, tail_poly;
            for (int n = 0; n < order; ++n) {
                ekx.push_back(power(k, n) * inv_factorial(n));
                tail_poly.push_back(MultiPoly(tail[n]));
            }
            const PowerSeries<MultiPoly> rhs =
                PowerSeries<MultiPoly>(ekx, order) * PowerSeries<MultiPoly>(tail_poly, order);
            for (int n = 0; n < order; ++n) {
                rb.check(weighted_stirling_poly(n, j) * inv_factorial(n) == rhs[n],
                         [&] { return at({{"j", j}, {"n", n}}, "polynomial egf "); });
            }
        }
    });
    return rb.finish();
}

// A rational function of (u, k) kept as numerator and denominator polynomials.
struct RationalFunction
{
    MultiPoly numerator;
    MultiPoly denominator;

    // Equality by cross-multiplication.
    friend bool operator==(const RationalFunction &a, const RationalFunction &b)
    {
        return a.numerator * b.denominator == b.numerator * a.denominator;
    }

    // Coefficients in u after setting k, lowest degree first.
    std::vector<Rational> at_k(const Rational &k) const
    {
        const Rational den = denominator.substitute("k", k).constant_term();
        if (den.is_zero()) {
            throw DivisionByZero("denominator vanishes at k = " + k.to_string());
        }
        const MultiPoly num = numerator.substitute("k", k);
        std::vector<Rational> out;
        for (int e = 0; e <= std::max(num.degree_in("u"), 0); ++e) {
            out.push_back(num.coefficient({{"u", static_cast<unsigned>(e)}}) / den);
        }
        return out;
    }
};

// p_l(u) = sum_{j<l} u^j/j! sum_{n<=j} (-1)^{j-n} binom(j, n) (n+k)^{-(l-j)},
// over the common denominator prod_{n<l} (k+n)^{l-n}.
inline RationalFunction compute_p_l(long l)
{
    if (l < 1) {
        throw InvalidArgument("p_l needs l >= 1");
    }
    const auto gens = MultiPoly::generators({"u", "k"});
    const MultiPoly &u = gens[0];
    const MultiPoly &k = gens[1];
    const auto shifted = [&](long n) { return k + MultiPoly(Rational(n)); };

    MultiPoly den(Rational(1));
    for (long n = 0; n < l; ++n) {
        den = den * power(shifted(n), l - n);
    }
    MultiPoly num;
    for (long j = 0; j < l; ++j) {
        MultiPoly inner;
        for (long n = 0; n <= j; ++n) {
            // den / (k+n)^{l-j}
            MultiPoly part(Rational(1));
            for (long m = 0; m < l; ++m) {
                part = part * power(shifted(m), m == n ? j - n : l - m);
            }
            part = part * binom(j, n);
            inner += (j - n) % 2 == 0 ? part : -part;
        }
        num += inner * power(u, j) * inv_factorial(j);
    }
    return {num, den};
}

// q_l(u) = p_l(u) at k = 1.
inline std::vector<Rational> compute_q_l(long l)
{
    return compute_p_l(l).at_k(Rational(1));
}

// r_m(u, k) from sum_j R(j+m, j, k) u^j = r_m / (1-u)^{2m+1}. The product
// with (1-u)^{2m+1} is taken through u^{3m+3}; anything left above u^m, or a
// degree in k above m, contradicts the theorem and throws DegreeViolation.
inline MultiPoly compute_r_m(long m)
{
    if (m < 0) {
        throw InvalidArgument("r_m needs m >= 0");
    }
    const long terms = 3 * m + 4;
    std::vector<MultiPoly> a;
    for (long j = 0; j < terms; ++j) {
        a.push_back(weighted_stirling_poly(j + m, j));
    }
    const MultiPoly u = MultiPoly::variable("u");
    MultiPoly r;
    for (long d = 0; d < terms; ++d) {
        MultiPoly c;
        for (long t = 0; t <= std::min(d, 2 * m + 1); ++t) {
            const MultiPoly term = a[static_cast<std::size_t>(d - t)] * binom(2 * m + 1, t);
            c += t % 2 == 0 ? term : -term;
        }
        if (d > m && !c.is_zero()) {
            throw DegreeViolation("r_" + std::to_string(m) + " has a nonzero coefficient at u^" + std::to_string(d));
        }
        if (d == m && c.is_zero()) {
            throw DegreeViolation("r_" + std::to_string(m) + " has degree below " + std::to_string(m) + " in u");
        }
        r += c * power(u, d);
    }
    if (r.degree_in("k") > m) {
        throw DegreeViolation("r_" + std::to_string(m) + " has degree " + std::to_string(r.degree_in("k")) +
                              " in k");
    }
    return r;
}

// Printed p_1, p_2, p_3.
inline RationalFunction printed_p_l(long l)
{
    const auto gens = MultiPoly::generators({"u", "k"});
    const MultiPoly &u = gens[0];
    const MultiPoly &k = gens[1];
    const MultiPoly one(Rational(1));
    const MultiPoly k1 = k + one, k2 = k + MultiPoly(Rational(2));
    switch (l) {
    case 1:
        return {one, k};
    case 2:
        // 1/k^2 - u/(k(k+1))
        return {k1 - u * k, k * k * k1};
    case 3: {
        // 1/k^3 - (2k+1)u/(k^2(k+1)^2) + u^2/(k(k+1)(k+2))
        const MultiPoly den = k * k * k * k1 * k1 * k2;
        const MultiPoly num = k1 * k1 * k2 - (k * Rational(2) + one) * u * k * k2 + u * u * k * k * k1;
        return {num, den};
    }
    default:
        throw InvalidArgument("printed p_l only for l <= 3");
    }
}

// Printed r_0, r_1, r_2.
inline MultiPoly printed_r_m(long m)
{
    const auto gens = MultiPoly::generators({"u", "k"});
    const MultiPoly &u = gens[0];
    const MultiPoly &k = gens[1];
    const MultiPoly one(Rational(1));
    switch (m) {
    case 0:
        return one;
    case 1:
        return k + (one - k) * u;
    case 2:
        return k * k + (one + k * Rational(3) - k * k * Rational(2)) * u +
               (MultiPoly(Rational(2)) - k * Rational(3) + k * k) * u * u;
    default:
        throw InvalidArgument("printed r_m only for m <= 2");
    }
}

// sum_n (n+k)^{n-l} x^n/n! = e^{kT} p_l(T) at integer k avoiding the poles k = 0, -1, ..., 1-l.
inline IdentityReport check_p_l(IntRange l_range, IntRange k_range, int order)
{
    ReportBuilder rb("p-l", order);
    rb.param("l", range_text(l_range)).param("k", range_text(k_range));
    rb.guarded([&] {
        const Series T = tree_function(order);
        const Series F = exp(T);
        for (long l = l_range.lo; l <= l_range.hi && !rb.failed(); ++l) {
            const RationalFunction p = compute_p_l(l);
            rb.check(p.numerator.degree_in("u") == l - 1, [&] { return at({{"l", l}}, "degree in u "); });
            if (l <= 3) {
                rb.check(p == printed_p_l(l), [&] { return at({{"l", l}}, "printed p_l "); });
            }
            for (long k = k_range.lo; k <= k_range.hi && !rb.failed(); ++k) {
                if (k <= 0 && k > -l) {
                    continue;
                }
                const std::vector<Rational> coeffs = p.at_k(Rational(k));
                same_series(rb, pow(F, k) * compose_polynomial<Rational>(coeffs, T),
                            egf(order, [&](long n) { return pow(Rational(n + k), n - l); }),
                            at({{"l", l}, {"k", k}}, "expansion "));
            }
        }
    });
    return rb.finish();
}

inline IdentityReport check_q_l(IntRange l_range, int order)
{
    ReportBuilder rb("q-l", order);
    rb.param("l", range_text(l_range));
    rb.guarded([&] {
        const Series T = tree_function(order);
        for (long l = l_range.lo; l <= l_range.hi && !rb.failed(); ++l) {
            const std::vector<Rational> q = compute_q_l(l);
            if (l == l_range.hi) {
                rb.result("q_" + std::to_string(l), polynomial_to_string(q, "u"));
            }
            same_series(rb, T * compose_polynomial<Rational>(q, T),
                        egf(order, [&](long n) { return n == 0 ? Rational(0) : pow(Rational(n), n - l); }),
                        at({{"l", l}}, "expansion "));
        }
    });
    return rb.finish();
}

// r_m for m in m_range: printed table, degree bounds, and
// sum_n (n+k)^{n+m} x^n/n! = e^{kT} r_m(T, k) / (1-T)^{2m+1} at integer k.
inline IdentityReport check_r_m(IntRange m_range, IntRange k_range, int order)
{
    ReportBuilder rb("r-m", order);
    rb.param("m", range_text(m_range)).param("k", range_text(k_range));
    rb.guarded([&] {
        const Series T = tree_function(order);
        const Series F = exp(T);
        const Series one = Series::one(order);
        for (long m = m_range.lo; m <= m_range.hi && !rb.failed(); ++m) {
            const MultiPoly r = compute_r_m(m);
            if (m == m_range.hi) {
                rb.result("r_" + std::to_string(m), r.to_string());
            }
            if (m <= 2) {
                rb.check(r == printed_r_m(m), [&] { return at({{"m", m}}, "printed r_m "); });
            }
            const Series denom = pow(one - T, 2 * m + 1);
            for (long k = k_range.lo; k <= k_range.hi && !rb.failed(); ++k) {
                const RationalFunction as_fraction{r, MultiPoly(Rational(1))};
                same_series(rb, pow(F, k) * compose_polynomial<Rational>(as_fraction.at_k(Rational(k)), T) / denom,
                            egf(order, [&](long n) { return pow(Rational(n + k), n + m); }),
                            at({{"m", m}, {"k", k}}, "expansion "));
            }
        }
    });
    return rb.finish();
}

// (Delta^k s)(n) for values s(start), s(start+1), ...; n is absolute.
inline Rational finite_difference(const std::vector<Rational> &values, long start, long k, long n)
{
    if (k < 0) {
        throw InvalidArgument("negative difference order");
    }
    if (n < start || n + k - start >= static_cast<long>(values.size())) {
        throw InsufficientRange("difference of order " + std::to_string(k) + " at " + std::to_string(n) +
                                " needs values through " + std::to_string(n + k));
    }
    Rational s;
    for (long i = 0; i <= k; ++i) {
        const Rational term = binom(k, i) * values[static_cast<std::size_t>(n - start + i)];
        s += (k - i) % 2 == 0 ? term : -term;
    }
    return s;
}

// Random integer polynomials of degree d <= d_max: Delta^d is d! L everywhere
// sampled and Delta^{d+1}, Delta^{d+2} vanish.
inline IdentityReport check_ffd_lemma(long d_max, std::uint64_t seed)
{
    ReportBuilder rb("finite-difference-lemma", static_cast<int>(d_max + 1));
    rb.param("d_max", d_max).param("seed", seed);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (long d = 0; d <= d_max && !rb.failed(); ++d) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<long> c(static_cast<std::size_t>(d + 1));
            for (auto &v : c) {
                v = coeff(rng);
            }
            if (c.back() == 0) {
                c.back() = 1;
            }
            const long start = -5;
            std::vector<Rational> values;
            for (long n = start; n < start + d + 12; ++n) {
                Rational v;
                for (std::size_t e = 0; e < c.size(); ++e) {
                    v += Rational(c[e]) * pow(Rational(n), static_cast<long>(e));
                }
                values.push_back(v);
            }
            const Rational expected = Rational(factorial(d)) * Rational(c.back());
            for (long n = start; n < start + 8; ++n) {
                rb.equal(finite_difference(values, start, d, n), expected, [&] { return at({{"d", d}, {"n", n}}); });
                rb.equal(finite_difference(values, start, d + 1, n), Rational(0),
                         [&] { return at({{"d", d}, {"n", n}}, "above degree "); });
                rb.equal(finite_difference(values, start, d + 2, n), Rational(0),
                         [&] { return at({{"d", d}, {"n", n}}, "above degree "); });
            }
        }
    }
    return rb.finish();
}

} // namespace lagrange_kit

#endif
