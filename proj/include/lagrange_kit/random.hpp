#ifndef LAGRANGE_KIT_RANDOM_HPP
#define LAGRANGE_KIT_RANDOM_HPP

#include <random>
#include <vector>

#include <lagrange_kit/laurent_series.hpp>
#include <lagrange_kit/power_series.hpp>
#include <lagrange_kit/rational.hpp>

namespace lagrange_kit
{

// p/q with |p| <= bound, 1 <= q <= bound.
inline Rational small_rational(std::mt19937_64 &rng, int bound = 3)
{
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    return Rational(num(rng), den(rng));
}

inline Rational nonzero_rational(std::mt19937_64 &rng, int bound = 3)
{
    for (;;) {
        const Rational r = small_rational(rng, bound);
        if (!r.is_zero()) {
            return r;
        }
    }
}

// Random coefficients c_lo..c_{hi-1}, zero elsewhere, at the given order.
inline PowerSeries<Rational> random_series(std::mt19937_64 &rng, int order, int lo = 0, int hi = -1)
{
    if (hi < 0) {
        hi = order;
    }
    std::vector<Rational> c(static_cast<std::size_t>(order));
    for (int i = lo; i < hi && i < order; ++i) {
        c[static_cast<std::size_t>(i)] = small_rational(rng);
    }
    return PowerSeries<Rational>(c, order);
}

// x + c_2 x^2 + ... + c_{deg} x^{deg}, c_1 optionally random nonzero.
inline PowerSeries<Rational> random_reversible(std::mt19937_64 &rng, int order, int deg, bool unit_lead = true)
{
    std::vector<Rational> c = random_series(rng, order, 2, deg + 1).coefficients();
    c[1] = unit_lead ? Rational(1) : nonzero_rational(rng);
    return PowerSeries<Rational>(c, order);
}

// Nonzero leading coefficient at x^lo, random through x^{hi-1}.
inline LaurentSeries<Rational> random_laurent(std::mt19937_64 &rng, int lo, int hi, int order)
{
    std::vector<Rational> c;
    c.push_back(nonzero_rational(rng));
    for (int e = lo + 1; e < hi; ++e) {
        c.push_back(small_rational(rng));
    }
    return LaurentSeries<Rational>(lo, c, order);
}

} // namespace lagrange_kit

#endif
