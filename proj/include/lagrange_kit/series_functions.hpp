#ifndef LAGRANGE_KIT_SERIES_FUNCTIONS_HPP
#define LAGRANGE_KIT_SERIES_FUNCTIONS_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/laurent_series.hpp>
#include <lagrange_kit/power_series.hpp>
#include <lagrange_kit/rational.hpp>
#include <lagrange_kit/scalar.hpp>

namespace lagrange_kit
{

namespace detail
{

template <CoefficientRing S>
bool is_one(const S &c)
{
    return c == S(Rational(1));
}

template <CoefficientRing S>
S zero_of()
{
    return S(Rational(0));
}

} // namespace detail

// exp(a) for a with zero constant term.
template <CoefficientRing S>
PowerSeries<S> exp(const PowerSeries<S> &a)
{
    const int n = a.order();
    if (n > 0 && !a[0].is_zero()) {
        throw BadConstantTerm("exp needs a series with constant term 0");
    }
    std::vector<S> e(static_cast<std::size_t>(n), detail::zero_of<S>());
    if (n == 0) {
        return PowerSeries<S>(e, 0);
    }
    e[0] = S(Rational(1));
    for (int k = 1; k < n; ++k) {
        S acc = detail::zero_of<S>();
        for (int j = 1; j <= k; ++j) {
            if (!a[j].is_zero()) {
                acc = acc + a[j] * e[static_cast<std::size_t>(k - j)] * Rational(j);
            }
        }
        e[static_cast<std::size_t>(k)] = acc * Rational(1, k);
    }
    return PowerSeries<S>(std::move(e), n);
}

// log(a) for a with constant term 1; the result has constant term 0.
template <CoefficientRing S>
PowerSeries<S> log(const PowerSeries<S> &a)
{
    const int n = a.order();
    if (n > 0 && !detail::is_one(a[0])) {
        throw BadConstantTerm("log needs a series with constant term 1");
    }
    std::vector<S> l(static_cast<std::size_t>(n), detail::zero_of<S>());
    for (int k = 1; k < n; ++k) {
        S acc = detail::zero_of<S>();
        for (int j = 1; j < k; ++j) {
            const S &lj = l[static_cast<std::size_t>(j)];
            if (!lj.is_zero() && !a[k - j].is_zero()) {
                acc = acc + lj * a[k - j] * Rational(j);
            }
        }
        l[static_cast<std::size_t>(k)] = a[k] - acc * Rational(1, k);
    }
    return PowerSeries<S>(std::move(l), n);
}

// a^e for an integer exponent; negative e needs an invertible constant term.
template <CoefficientRing S>
PowerSeries<S> pow(const PowerSeries<S> &a, long e)
{
    if (e < 0) {
        return pow(a.inverse(), -e);
    }
    PowerSeries<S> result = PowerSeries<S>::one(a.order());
    PowerSeries<S> square = a;
    while (e > 0) {
        if (e & 1) {
            result = result * square;
        }
        e >>= 1;
        if (e > 0) {
            square = square * square;
        }
    }
    return result;
}

// a^e for a rational exponent. Integer e accepts any base the integer power
// accepts; otherwise the constant term must be 1 and the binomial series is used.
template <CoefficientRing S>
PowerSeries<S> pow(const PowerSeries<S> &a, const Rational &e)
{
    if (e.is_integer()) {
        return pow(a, e.numerator().get_si());
    }
    const int n = a.order();
    if (n > 0 && !detail::is_one(a[0])) {
        throw BadConstantTerm("non-integer power needs a series with constant term 1");
    }
    std::vector<S> p(static_cast<std::size_t>(n), detail::zero_of<S>());
    if (n == 0) {
        return PowerSeries<S>(p, 0);
    }
    p[0] = S(Rational(1));
    // k p_k = sum_j ((e+1) j - k) a_j p_{k-j}
    for (int k = 1; k < n; ++k) {
        S acc = detail::zero_of<S>();
        for (int j = 1; j <= k; ++j) {
            if (!a[j].is_zero()) {
                acc = acc + a[j] * p[static_cast<std::size_t>(k - j)] * ((e + Rational(1)) * Rational(j) - Rational(k));
            }
        }
        p[static_cast<std::size_t>(k)] = acc * Rational(1, k);
    }
    return PowerSeries<S>(std::move(p), n);
}

// outer(inner) where inner(0) = 0. With v the valuation of inner the result
// is exact below min(inner.order(), outer.order() * v).
template <CoefficientRing S>
PowerSeries<S> compose(const PowerSeries<S> &outer, const PowerSeries<S> &inner)
{
    const int m = inner.order();
    if (m > 0 && !inner[0].is_zero()) {
        throw InadmissibleComposition("inner series has a nonzero constant term");
    }
    const int v = inner.valuation();
    const int order = v >= m ? (outer.order() > 0 ? m : 0) : std::min(m, outer.order() * v);
    if (order <= 0) {
        return PowerSeries<S>::zero(std::max(order, 0));
    }
    if (v >= order) {
        return PowerSeries<S>::constant(outer.coeff(0), order);
    }
    const PowerSeries<S> h = inner.truncated(order);
    const int terms = std::min(outer.order(), (order + v - 1) / v);
    PowerSeries<S> r = PowerSeries<S>::constant(outer[terms - 1], order);
    for (int i = terms - 2; i >= 0; --i) {
        r = r * h + PowerSeries<S>::constant(outer[i], order);
    }
    return r;
}

// Polynomial outer: any inner is admissible because the sum is finite.
template <CoefficientRing S>
PowerSeries<S> compose_polynomial(std::span<const S> poly, const PowerSeries<S> &inner)
{
    const int order = inner.order();
    if (poly.empty()) {
        return PowerSeries<S>::zero(order);
    }
    PowerSeries<S> r = PowerSeries<S>::constant(poly.back(), order);
    for (std::size_t i = poly.size() - 1; i-- > 0;) {
        r = r * inner + PowerSeries<S>::constant(poly[i], order);
    }
    return r;
}

// outer(inner) for a Laurent outer. Negative exponents need inner = c x + ...
// with c a unit; precision is tracked through the Laurent arithmetic.
template <CoefficientRing S>
LaurentSeries<S> compose(const LaurentSeries<S> &outer, const PowerSeries<S> &inner)
{
    const int m = inner.order();
    if (m > 0 && !inner[0].is_zero()) {
        throw InadmissibleComposition("inner series has a nonzero constant term");
    }
    const int lo = outer.min_exponent();
    const int no = outer.order();
    const bool needs_inverse = lo < 0 || no < 0;
    if (needs_inverse && (inner.valuation() != 1 || !inner[1].is_unit())) {
        throw InadmissibleComposition("negative powers need an inner series of valuation 1 with a unit leading "
                                      "coefficient");
    }
    LaurentSeries<S> result = LaurentSeries<S>::zero(m);
    if (no > 0) {
        std::vector<S> pos;
        for (int e = 0; e < no; ++e) {
            pos.push_back(e < lo ? detail::zero_of<S>() : outer.coeff(e));
        }
        result = LaurentSeries<S>(compose(PowerSeries<S>(pos, no), inner));
    } else {
        // Unknown tail O(t^no) maps to O(x^no).
        result = LaurentSeries<S>::zero(std::min(m, no));
    }
    if (lo < 0 && !outer.is_zero()) {
        const LaurentSeries<S> w = LaurentSeries<S>(inner).inverse();
        const int top = std::min(-1, no - 1);
        // sum_{e=lo}^{top} c_e w^{-e}, Horner in w.
        LaurentSeries<S> acc = LaurentSeries<S>::monomial(outer.coeff(lo), 0, w.order() + 1);
        for (int e = lo + 1; e <= top; ++e) {
            acc = acc * w + LaurentSeries<S>::monomial(outer.coeff(e), 0, acc.order() + 1);
        }
        acc = acc * w.pow(-top);
        result = result + acc;
    }
    return result;
}

// Compositional inverse of f = c_1 x + c_2 x^2 + ... with c_1 a unit.
// Solves g(f(x)) = x coefficient by coefficient against the powers of f.
template <CoefficientRing S>
PowerSeries<S> reversion(const PowerSeries<S> &f)
{
    const int n = f.order();
    if (n < 2) {
        throw NotReversible("series of order below 2 has no determined linear term");
    }
    if (!f[0].is_zero()) {
        throw NotReversible("constant term is nonzero");
    }
    if (f[1].is_zero() || !f[1].is_unit()) {
        throw NotReversible("linear coefficient is not invertible");
    }
    std::vector<PowerSeries<S>> powers;
    powers.reserve(static_cast<std::size_t>(n));
    powers.push_back(PowerSeries<S>::one(n));
    for (int j = 1; j < n; ++j) {
        powers.push_back(powers.back() * f);
    }
    const S c1_inv = f[1].inverse();
    std::vector<S> b(static_cast<std::size_t>(n), detail::zero_of<S>());
    S lead_inv = S(Rational(1));
    for (int k = 1; k < n; ++k) {
        lead_inv = lead_inv * c1_inv;
        S acc = k == 1 ? S(Rational(1)) : detail::zero_of<S>();
        for (int j = 1; j < k; ++j) {
            const S &bj = b[static_cast<std::size_t>(j)];
            if (!bj.is_zero()) {
                acc = acc - bj * powers[static_cast<std::size_t>(j)][k];
            }
        }
        b[static_cast<std::size_t>(k)] = acc * lead_inv;
    }
    return PowerSeries<S>(std::move(b), n);
}

template <CoefficientRing S>
S residue(const LaurentSeries<S> &a)
{
    return a.residue();
}

} // namespace lagrange_kit

#endif
