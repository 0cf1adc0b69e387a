#ifndef LAGRANGE_KIT_SCALAR_HPP
#define LAGRANGE_KIT_SCALAR_HPP

#include <concepts>

#include <lagrange_kit/rational.hpp>

namespace lagrange_kit
{

// Commutative coefficient ring containing the rationals. Series, solvers and
// inversion formulas are written against this concept; the library ships two
// models, Rational and MultiPoly.
template <typename S>
concept CoefficientRing = std::regular<S> && requires(const S a, const S b, const Rational q) {
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a * q } -> std::same_as<S>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_unit() } -> std::same_as<bool>;
    { a.inverse() } -> std::same_as<S>;
    S(q);
};

// Integer power in any coefficient ring, with x^0 = 1. Negative exponents need a unit.
template <CoefficientRing S>
S power(const S &base, long exponent)
{
    if (exponent < 0) {
        return power(base.inverse(), -exponent);
    }
    S result(Rational(1));
    S square = base;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * square;
        }
        exponent >>= 1;
        if (exponent > 0) {
            square = square * square;
        }
    }
    return result;
}

} // namespace lagrange_kit

#endif
