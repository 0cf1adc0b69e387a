#ifndef LAGRANGE_KIT_TESTS_SUPPORT_HPP
#define LAGRANGE_KIT_TESTS_SUPPORT_HPP

#include <lagrange_kit/laurent_series.hpp>
#include <lagrange_kit/power_series.hpp>
#include <lagrange_kit/random.hpp>
#include <lagrange_kit/rational.hpp>

namespace test_support
{

using lagrange_kit::LaurentSeries;
using lagrange_kit::PowerSeries;
using lagrange_kit::Rational;
using PS = PowerSeries<Rational>;
using LS = LaurentSeries<Rational>;

using lagrange_kit::nonzero_rational;
using lagrange_kit::random_laurent;
using lagrange_kit::random_reversible;
using lagrange_kit::random_series;
using lagrange_kit::small_rational;

} // namespace test_support

#endif
