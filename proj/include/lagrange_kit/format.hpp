#ifndef LAGRANGE_KIT_FORMAT_HPP
#define LAGRANGE_KIT_FORMAT_HPP

#include <sstream>
#include <string>
#include <vector>

#include <lagrange_kit/rational.hpp>

namespace lagrange_kit
{

// Univariate polynomial from its coefficient list, lowest degree first:
// {2, -1} -> "2 - x", {1/2, 0, 3} -> "1/2 + 3*x^2".
inline std::string polynomial_to_string(const std::vector<Rational> &coeffs, const std::string &var = "x")
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const Rational &c = coeffs[e];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) {
            os << mag << "*";
        }
        os << var;
        if (e > 1) {
            os << "^" << e;
        }
    }
    return first ? "0" : os.str();
}

} // namespace lagrange_kit

#endif
