#ifndef LAGRANGE_KIT_LITERAL_HPP
#define LAGRANGE_KIT_LITERAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/power_series.hpp>
#include <lagrange_kit/rational.hpp>
#include <lagrange_kit/scalar.hpp>

namespace lagrange_kit
{

inline const std::vector<std::string> &series_presets()
{
    static const std::vector<std::string> names{"exp", "geom", "one-plus-t-squared"};
    return names;
}

// "c0,c1,c2,..." with each entry "p" or "p/q". Positions in errors are
// byte offsets into `text`.
inline std::vector<Rational> parse_coefficient_list(std::string_view text)
{
    if (text.empty()) {
        throw ParseError("empty coefficient list", 0);
    }
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(Rational::parse(text.substr(start, end - start), start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

// A coefficient list or one of the presets, as a series of the given order.
inline PowerSeries<Rational> parse_series_literal(std::string_view text, int order)
{
    std::vector<Rational> c;
    if (text == "exp") {
        for (int n = 0; n < order; ++n) {
            c.push_back(Rational(Integer(1), factorial(n)));
        }
    } else if (text == "geom") {
        c.assign(static_cast<std::size_t>(order), Rational(1));
    } else if (text == "one-plus-t-squared") {
        c = {Rational(1), Rational(2), Rational(1)};
    } else {
        const char first = text.empty() ? '\0' : text.front();
        if ((first >= 'a' && first <= 'z') || (first >= 'A' && first <= 'Z')) {
            throw ParseError("unknown preset '" + std::string(text) + "'", 0);
        }
        c = parse_coefficient_list(text);
    }
    return PowerSeries<Rational>(std::move(c), order);
}

} // namespace lagrange_kit

#endif
