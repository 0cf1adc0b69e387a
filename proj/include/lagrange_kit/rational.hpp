#ifndef LAGRANGE_KIT_RATIONAL_HPP
#define LAGRANGE_KIT_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

#include <lagrange_kit/errors.hpp>

namespace lagrange_kit
{

using Integer = mpz_class;

// Exact rational number. Always stored in lowest terms with a positive
// denominator, so structural equality is mathematical equality.
class Rational
{
public:
    Rational() = default;
    template <std::integral T>
    Rational(T n)
    {
        if constexpr (std::is_signed_v<T>) {
            m_value = static_cast<long>(n);
        } else {
            m_value = static_cast<unsigned long>(n);
        }
    }
    Rational(const Integer &n) : m_value(n) {}
    Rational(const Integer &num, const Integer &den)
    {
        if (den == 0) {
            throw DivisionByZero("rational with zero denominator");
        }
        m_value = mpq_class(num, den);
        m_value.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    // Accepts "p" or "p/q" with optional sign and surrounding blanks.
    static Rational parse(std::string_view text, std::size_t offset = 0)
    {
        std::size_t i = 0;
        auto skip_blanks = [&] {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
                ++i;
            }
        };
        auto read_integer = [&](bool allow_sign) {
            const std::size_t start = i;
            if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
                ++i;
            }
            const std::size_t digits = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                ++i;
            }
            if (i == digits) {
                throw ParseError("expected digits", offset + i);
            }
            std::string token(text.substr(start, i - start));
            if (token.front() == '+') {
                token.erase(0, 1);
            }
            return Integer(token);
        };
        skip_blanks();
        Integer num = read_integer(true);
        Integer den = 1;
        skip_blanks();
        if (i < text.size() && text[i] == '/') {
            ++i;
            skip_blanks();
            const std::size_t den_pos = i;
            den = read_integer(false);
            if (den == 0) {
                throw ParseError("zero denominator", offset + den_pos);
            }
            skip_blanks();
        }
        if (i != text.size()) {
            throw ParseError(std::string("unexpected character '") + text[i] + "'", offset + i);
        }
        return Rational(num, den);
    }

    Integer numerator() const
    {
        return Integer(m_value.get_num());
    }
    Integer denominator() const
    {
        return Integer(m_value.get_den());
    }
    const mpq_class &get_mpq() const
    {
        return m_value;
    }

    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    // Every nonzero rational is a unit.
    bool is_unit() const
    {
        return !is_zero();
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }
    int sign() const
    {
        return sgn(m_value);
    }
    Rational inverse() const
    {
        if (is_zero()) {
            throw DivisionByZero("inverse of zero");
        }
        Rational r;
        r.m_value = 1 / m_value;
        return r;
    }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const
    {
        return m_value.get_str();
    }
    // Always "p/q", as used by the JSON series format.
    std::string to_fraction_string() const
    {
        return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
    }

    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw DivisionByZero("rational division by zero");
        }
        m_value /= o.m_value;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.m_value = -a.m_value;
        return r;
    }
    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.to_string();
    }

private:
    mpq_class m_value;
};

// base^exponent with 0^0 = 1. A negative exponent needs a nonzero base.
inline Rational pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_mpq().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_mpq().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

inline Integer factorial(long n)
{
    if (n < 0) {
        throw InvalidArgument("factorial of a negative integer");
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// binom(a, k) = a(a-1)...(a-k+1)/k! for integer k >= 0, and 0 for k < 0.
// Valid for every integer a, negative included.
inline Integer binomial(long a, long k)
{
    if (k < 0) {
        return 0;
    }
    Integer r;
    const Integer top(a);
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// Same convention with a rational upper argument.
inline Rational binomial(const Rational &a, long k)
{
    if (k < 0) {
        return Rational(0);
    }
    Rational r(1);
    for (long i = 0; i < k; ++i) {
        r *= a - Rational(i);
    }
    return r / Rational(factorial(k));
}

// n! / (parts[0]! parts[1]! ...), or 0 when the parts are negative or do not sum to n.
inline Integer multinomial(long n, std::span<const long> parts)
{
    long total = 0;
    for (long p : parts) {
        if (p < 0) {
            return 0;
        }
        total += p;
    }
    if (total != n || n < 0) {
        return 0;
    }
    Integer r = factorial(n);
    for (long p : parts) {
        r /= factorial(p);
    }
    return r;
}

inline Integer multinomial(long n, std::initializer_list<long> parts)
{
    return multinomial(n, std::span<const long>(parts.begin(), parts.size()));
}

} // namespace lagrange_kit

#endif
