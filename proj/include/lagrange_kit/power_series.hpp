#ifndef LAGRANGE_KIT_POWER_SERIES_HPP
#define LAGRANGE_KIT_POWER_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/rational.hpp>
#include <lagrange_kit/scalar.hpp>

namespace lagrange_kit
{

// Truncated power series c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N).
//
// The order N is exclusive: coefficients below it are exact, the rest are
// unknown. Ring operations require both operands to carry the same order, so a
// computation runs in one fixed truncation context. Calculus changes the
// order by one because that is what the data supports: the derivative of a
// series known through x^{N-1} is known through x^{N-2}.
template <CoefficientRing S>
class PowerSeries
{
public:
    using scalar_type = S;

    PowerSeries() = default;

    explicit PowerSeries(std::vector<S> coefficients)
        : m_coeffs(std::move(coefficients)), m_order(static_cast<int>(m_coeffs.size()))
    {
    }

    // Pads with zeros or drops coefficients so that exactly `order` are stored.
    PowerSeries(std::vector<S> coefficients, int order) : m_coeffs(std::move(coefficients)), m_order(order)
    {
        if (order < 0) {
            throw InvalidArgument("negative truncation order");
        }
        m_coeffs.resize(static_cast<std::size_t>(order), S(Rational(0)));
    }

    static PowerSeries zero(int order)
    {
        return PowerSeries({}, order);
    }
    static PowerSeries constant(const S &c, int order)
    {
        return monomial(c, 0, order);
    }
    static PowerSeries one(int order)
    {
        return constant(S(Rational(1)), order);
    }
    // The series x.
    static PowerSeries x(int order)
    {
        return monomial(S(Rational(1)), 1, order);
    }
    static PowerSeries monomial(const S &c, int exponent, int order)
    {
        PowerSeries r = zero(order);
        if (exponent >= 0 && exponent < order) {
            r.m_coeffs[static_cast<std::size_t>(exponent)] = c;
        }
        return r;
    }

    int order() const
    {
        return m_order;
    }
    const std::vector<S> &coefficients() const
    {
        return m_coeffs;
    }

    // Unchecked access, 0 <= n < order().
    const S &operator[](int n) const
    {
        return m_coeffs[static_cast<std::size_t>(n)];
    }

    // [x^n]; zero for negative n, OutOfPrecision at or beyond the order.
    S coeff(int n) const
    {
        if (n < 0) {
            return S(Rational(0));
        }
        if (n >= m_order) {
            throw OutOfPrecision("coefficient of x^" + std::to_string(n) + " requested from a series of order " +
                                 std::to_string(m_order));
        }
        return m_coeffs[static_cast<std::size_t>(n)];
    }

    // Index of the first nonzero coefficient, or order() when all known ones vanish.
    int valuation() const
    {
        for (int i = 0; i < m_order; ++i) {
            if (!m_coeffs[static_cast<std::size_t>(i)].is_zero()) {
                return i;
            }
        }
        return m_order;
    }
    bool is_zero() const
    {
        return valuation() == m_order;
    }

    PowerSeries truncated(int order) const
    {
        if (order > m_order) {
            throw OutOfPrecision("cannot raise the order of a series from " + std::to_string(m_order) + " to " +
                                 std::to_string(order));
        }
        return PowerSeries(std::vector<S>(m_coeffs.begin(), m_coeffs.begin() + std::max(order, 0)), order);
    }

    // Termwise d/dx. The result has order N - 1.
    PowerSeries derivative() const
    {
        if (m_order == 0) {
            return *this;
        }
        std::vector<S> out;
        out.reserve(static_cast<std::size_t>(m_order - 1));
        for (int n = 1; n < m_order; ++n) {
            out.push_back(m_coeffs[static_cast<std::size_t>(n)] * Rational(n));
        }
        return PowerSeries(std::move(out), m_order - 1);
    }

    // Antiderivative with zero constant term. The result has order N + 1.
    PowerSeries integral() const
    {
        std::vector<S> out;
        out.reserve(static_cast<std::size_t>(m_order + 1));
        out.push_back(S(Rational(0)));
        for (int n = 0; n < m_order; ++n) {
            out.push_back(m_coeffs[static_cast<std::size_t>(n)] * Rational(1, n + 1));
        }
        return PowerSeries(std::move(out), m_order + 1);
    }

    // x^s * this, order N + s.
    PowerSeries shifted_up(int s) const
    {
        std::vector<S> out(static_cast<std::size_t>(s), S(Rational(0)));
        out.insert(out.end(), m_coeffs.begin(), m_coeffs.end());
        return PowerSeries(std::move(out), m_order + s);
    }

    // this / x^s, order N - s. The low s coefficients must vanish.
    PowerSeries shifted_down(int s) const
    {
        if (s > m_order) {
            throw OutOfPrecision("shift exceeds the order");
        }
        for (int i = 0; i < s; ++i) {
            if (!m_coeffs[static_cast<std::size_t>(i)].is_zero()) {
                throw DivisionByNonUnit("series is not divisible by x^" + std::to_string(s));
            }
        }
        return PowerSeries(std::vector<S>(m_coeffs.begin() + s, m_coeffs.end()), m_order - s);
    }

    // Multiplicative inverse; needs an invertible constant term.
    PowerSeries inverse() const
    {
        if (m_order == 0) {
            return *this;
        }
        if (m_coeffs[0].is_zero()) {
            throw DivisionByNonUnit("power series with zero constant term is not invertible");
        }
        if (!m_coeffs[0].is_unit()) {
            throw DivisionByNonUnit("constant term is not a unit");
        }
        const S inv0 = m_coeffs[0].inverse();
        std::vector<S> out(static_cast<std::size_t>(m_order), S(Rational(0)));
        out[0] = inv0;
        for (int n = 1; n < m_order; ++n) {
            S acc(Rational(0));
            for (int i = 1; i <= n; ++i) {
                const S &b = m_coeffs[static_cast<std::size_t>(i)];
                if (!b.is_zero()) {
                    acc = acc + b * out[static_cast<std::size_t>(n - i)];
                }
            }
            out[static_cast<std::size_t>(n)] = -(acc * inv0);
        }
        return PowerSeries(std::move(out), m_order);
    }

    PowerSeries &operator+=(const PowerSeries &o)
    {
        check_same_order(o);
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            m_coeffs[i] = m_coeffs[i] + o.m_coeffs[i];
        }
        return *this;
    }
    PowerSeries &operator-=(const PowerSeries &o)
    {
        check_same_order(o);
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            m_coeffs[i] = m_coeffs[i] - o.m_coeffs[i];
        }
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries &b)
    {
        return a += b;
    }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries &b)
    {
        return a -= b;
    }
    friend PowerSeries operator-(PowerSeries a)
    {
        for (auto &c : a.m_coeffs) {
            c = -c;
        }
        return a;
    }
    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
    {
        a.check_same_order(b);
        const int n = a.m_order;
        std::vector<S> out(static_cast<std::size_t>(n), S(Rational(0)));
        for (int i = 0; i < n; ++i) {
            const S &ai = a.m_coeffs[static_cast<std::size_t>(i)];
            if (ai.is_zero()) {
                continue;
            }
            for (int j = 0; i + j < n; ++j) {
                const S &bj = b.m_coeffs[static_cast<std::size_t>(j)];
                if (!bj.is_zero()) {
                    out[static_cast<std::size_t>(i + j)] = out[static_cast<std::size_t>(i + j)] + ai * bj;
                }
            }
        }
        return PowerSeries(std::move(out), n);
    }
    friend PowerSeries operator*(PowerSeries a, const S &c)
    {
        for (auto &x : a.m_coeffs) {
            x = x * c;
        }
        return a;
    }
    friend PowerSeries operator*(const S &c, PowerSeries a)
    {
        return std::move(a) * c;
    }
    friend PowerSeries operator/(const PowerSeries &a, const PowerSeries &b)
    {
        a.check_same_order(b);
        return a * b.inverse();
    }
    PowerSeries &operator*=(const PowerSeries &o)
    {
        return *this = *this * o;
    }

    friend bool operator==(const PowerSeries &a, const PowerSeries &b) = default;

    friend std::ostream &operator<<(std::ostream &os, const PowerSeries &a)
    {
        bool first = true;
        for (int i = 0; i < a.m_order; ++i) {
            const S &c = a.m_coeffs[static_cast<std::size_t>(i)];
            if (c.is_zero()) {
                continue;
            }
            os << (first ? "" : " + ") << "(" << c << ")";
            if (i > 0) {
                os << "*x^" << i;
            }
            first = false;
        }
        return os << (first ? "" : " + ") << "O(x^" << a.m_order << ")";
    }

private:
    void check_same_order(const PowerSeries &o) const
    {
        if (o.m_order != m_order) {
            throw TruncationMismatch("orders " + std::to_string(m_order) + " and " + std::to_string(o.m_order));
        }
    }

    std::vector<S> m_coeffs;
    int m_order = 0;
};

// Factory for series that share one truncation order.
template <CoefficientRing S>
class TruncationContext
{
public:
    explicit TruncationContext(int order) : m_order(order)
    {
        if (order < 1) {
            throw InvalidArgument("truncation order must be at least 1");
        }
    }
    int order() const
    {
        return m_order;
    }
    PowerSeries<S> series(std::vector<S> coefficients) const
    {
        return PowerSeries<S>(std::move(coefficients), m_order);
    }
    PowerSeries<S> series(std::initializer_list<S> coefficients) const
    {
        return PowerSeries<S>(std::vector<S>(coefficients), m_order);
    }
    PowerSeries<S> zero() const
    {
        return PowerSeries<S>::zero(m_order);
    }
    PowerSeries<S> one() const
    {
        return PowerSeries<S>::one(m_order);
    }
    PowerSeries<S> x() const
    {
        return PowerSeries<S>::x(m_order);
    }
    PowerSeries<S> constant(const S &c) const
    {
        return PowerSeries<S>::constant(c, m_order);
    }
    PowerSeries<S> monomial(const S &c, int exponent) const
    {
        return PowerSeries<S>::monomial(c, exponent, m_order);
    }

private:
    int m_order;
};

} // namespace lagrange_kit

#endif
