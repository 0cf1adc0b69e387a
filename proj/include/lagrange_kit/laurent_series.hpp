#ifndef LAGRANGE_KIT_LAURENT_SERIES_HPP
#define LAGRANGE_KIT_LAURENT_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/power_series.hpp>
#include <lagrange_kit/rational.hpp>
#include <lagrange_kit/scalar.hpp>

namespace lagrange_kit
{

// Truncated Laurent series sum_{n=m}^{N-1} c_n x^n + O(x^N).
//
// Canonical form: the coefficient at min_exponent() is nonzero, or the series
// is zero and min_exponent() == order(). The order is the absolute precision.
// Unlike PowerSeries, operands of different orders may be mixed: negative
// exponents consume precision (x^{-2} * O(x^N) is O(x^{N-2})), so each
// operation returns the exact precision its inputs support.
template <CoefficientRing S>
class LaurentSeries
{
public:
    using scalar_type = S;

    LaurentSeries() = default;

    // Coefficients for exponents min_exponent, min_exponent + 1, ...; entries
    // at or beyond `order` are dropped, missing ones are zero.
    LaurentSeries(int min_exponent, std::vector<S> coefficients, int order)
        : m_min(min_exponent), m_coeffs(std::move(coefficients)), m_order(order)
    {
        const int keep = std::max(order - min_exponent, 0);
        m_coeffs.resize(static_cast<std::size_t>(keep), S(Rational(0)));
        canonicalize();
    }

    LaurentSeries(const PowerSeries<S> &p) : LaurentSeries(0, p.coefficients(), p.order()) {}

    static LaurentSeries zero(int order)
    {
        return LaurentSeries(order, {}, order);
    }
    static LaurentSeries monomial(const S &c, int exponent, int order)
    {
        return LaurentSeries(exponent, {c}, order);
    }

    int min_exponent() const
    {
        return m_min;
    }
    int order() const
    {
        return m_order;
    }
    // Coefficients for exponents min_exponent() .. order() - 1.
    const std::vector<S> &coefficients() const
    {
        return m_coeffs;
    }
    bool is_zero() const
    {
        return m_coeffs.empty();
    }
    int valuation() const
    {
        return m_min;
    }

    S coeff(int n) const
    {
        if (n >= m_order) {
            throw OutOfPrecision("coefficient of x^" + std::to_string(n) + " requested from a series of order " +
                                 std::to_string(m_order));
        }
        if (n < m_min) {
            return S(Rational(0));
        }
        return m_coeffs[static_cast<std::size_t>(n - m_min)];
    }
    S residue() const
    {
        return coeff(-1);
    }

    PowerSeries<S> to_power_series() const
    {
        if (m_order < 0) {
            throw OutOfPrecision("series of negative order has no power series part");
        }
        if (m_min < 0) {
            throw NotAPowerSeries("series has a nonzero coefficient at x^" + std::to_string(m_min));
        }
        std::vector<S> out(static_cast<std::size_t>(m_min), S(Rational(0)));
        out.insert(out.end(), m_coeffs.begin(), m_coeffs.end());
        return PowerSeries<S>(std::move(out), m_order);
    }

    LaurentSeries truncated(int order) const
    {
        if (order > m_order) {
            throw OutOfPrecision("cannot raise the order of a series from " + std::to_string(m_order) + " to " +
                                 std::to_string(order));
        }
        return LaurentSeries(m_min, m_coeffs, order);
    }

    // x^s * this.
    LaurentSeries shifted(int s) const
    {
        return LaurentSeries(m_min + s, m_coeffs, m_order + s);
    }

    LaurentSeries derivative() const
    {
        std::vector<S> out;
        out.reserve(m_coeffs.size());
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            const int e = m_min + static_cast<int>(i);
            out.push_back(m_coeffs[i] * Rational(e));
        }
        return LaurentSeries(m_min - 1, std::move(out), m_order - 1);
    }

    // Antiderivative with zero constant term; the residue must vanish.
    LaurentSeries integral() const
    {
        if (m_order > -1 && !coeff(-1).is_zero()) {
            throw NonIntegrableResidue("coefficient of x^-1 is " + to_text(coeff(-1)));
        }
        std::vector<S> out;
        out.reserve(m_coeffs.size());
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            const int e = m_min + static_cast<int>(i);
            out.push_back(e == -1 ? S(Rational(0)) : m_coeffs[i] * Rational(1, e + 1));
        }
        return LaurentSeries(m_min + 1, std::move(out), m_order + 1);
    }

    // Inverse of x^m u(x); the leading coefficient must be a unit.
    LaurentSeries inverse() const
    {
        if (is_zero()) {
            throw DivisionByZeroSeries("series is zero through x^" + std::to_string(m_order - 1));
        }
        if (!m_coeffs.front().is_unit()) {
            throw DivisionByNonUnit("leading coefficient is not a unit");
        }
        const PowerSeries<S> unit(m_coeffs, m_order - m_min);
        const PowerSeries<S> inv = unit.inverse();
        return LaurentSeries(-m_min, inv.coefficients(), inv.order() - m_min);
    }

    // Integer power; negative exponents go through inverse(). this^0 = 1 at the current order.
    LaurentSeries pow(long k) const
    {
        if (k < 0) {
            return inverse().pow(-k);
        }
        if (k == 0) {
            return monomial(S(Rational(1)), 0, std::max(m_order, 1));
        }
        if (is_zero()) {
            return zero(m_order + static_cast<int>(k - 1) * m_min);
        }
        // x^{km} u^k, u known to relative precision N - m.
        const PowerSeries<S> unit(m_coeffs, m_order - m_min);
        PowerSeries<S> result = PowerSeries<S>::one(unit.order());
        PowerSeries<S> square = unit;
        long e = k;
        while (e > 0) {
            if (e & 1) {
                result = result * square;
            }
            e >>= 1;
            if (e > 0) {
                square = square * square;
            }
        }
        const int shift = static_cast<int>(k) * m_min;
        return LaurentSeries(shift, result.coefficients(), shift + unit.order());
    }

    friend LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b)
    {
        return combine(a, b, Rational(1));
    }
    friend LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b)
    {
        return combine(a, b, Rational(-1));
    }
    friend LaurentSeries operator-(LaurentSeries a)
    {
        for (auto &c : a.m_coeffs) {
            c = -c;
        }
        return a;
    }
    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b)
    {
        const int order = std::min(a.m_order + b.m_min, b.m_order + a.m_min);
        const int lo = a.m_min + b.m_min;
        if (a.is_zero() || b.is_zero() || order <= lo) {
            return zero(order);
        }
        const int len = order - lo;
        std::vector<S> out(static_cast<std::size_t>(len), S(Rational(0)));
        for (std::size_t i = 0; i < a.m_coeffs.size() && static_cast<int>(i) < len; ++i) {
            const S &ai = a.m_coeffs[i];
            if (ai.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.m_coeffs.size() && static_cast<int>(i + j) < len; ++j) {
                const S &bj = b.m_coeffs[j];
                if (!bj.is_zero()) {
                    out[i + j] = out[i + j] + ai * bj;
                }
            }
        }
        return LaurentSeries(lo, std::move(out), order);
    }
    friend LaurentSeries operator*(LaurentSeries a, const S &c)
    {
        for (auto &x : a.m_coeffs) {
            x = x * c;
        }
        a.canonicalize();
        return a;
    }
    friend LaurentSeries operator*(const S &c, LaurentSeries a)
    {
        return std::move(a) * c;
    }
    friend LaurentSeries operator/(const LaurentSeries &a, const LaurentSeries &b)
    {
        return a * b.inverse();
    }

    friend bool operator==(const LaurentSeries &a, const LaurentSeries &b) = default;

    friend std::ostream &operator<<(std::ostream &os, const LaurentSeries &a)
    {
        bool first = true;
        for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
            if (a.m_coeffs[i].is_zero()) {
                continue;
            }
            os << (first ? "" : " + ") << "(" << a.m_coeffs[i] << ")*x^" << (a.m_min + static_cast<int>(i));
            first = false;
        }
        return os << (first ? "" : " + ") << "O(x^" << a.m_order << ")";
    }

private:
    static std::string to_text(const S &c)
    {
        if constexpr (requires { c.to_string(); }) {
            return c.to_string();
        } else {
            return "?";
        }
    }

    static LaurentSeries combine(const LaurentSeries &a, const LaurentSeries &b, const Rational &sign)
    {
        const int order = std::min(a.m_order, b.m_order);
        const int lo = std::min(a.m_min, b.m_min);
        if (order <= lo) {
            return zero(order);
        }
        std::vector<S> out(static_cast<std::size_t>(order - lo), S(Rational(0)));
        for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
            const int e = a.m_min + static_cast<int>(i);
            if (e < order) {
                out[static_cast<std::size_t>(e - lo)] = a.m_coeffs[i];
            }
        }
        for (std::size_t i = 0; i < b.m_coeffs.size(); ++i) {
            const int e = b.m_min + static_cast<int>(i);
            if (e < order) {
                auto &slot = out[static_cast<std::size_t>(e - lo)];
                slot = slot + b.m_coeffs[i] * sign;
            }
        }
        return LaurentSeries(lo, std::move(out), order);
    }

    void canonicalize()
    {
        std::size_t lead = 0;
        while (lead < m_coeffs.size() && m_coeffs[lead].is_zero()) {
            ++lead;
        }
        if (lead == m_coeffs.size()) {
            m_coeffs.clear();
            m_min = m_order;
            return;
        }
        if (lead > 0) {
            m_coeffs.erase(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
            m_min += static_cast<int>(lead);
        }
    }

    int m_min = 0;
    std::vector<S> m_coeffs;
    int m_order = 0;
};

} // namespace lagrange_kit

#endif
