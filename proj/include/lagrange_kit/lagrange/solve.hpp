#ifndef LAGRANGE_KIT_LAGRANGE_SOLVE_HPP
#define LAGRANGE_KIT_LAGRANGE_SOLVE_HPP

#include <string>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/multipoly.hpp>
#include <lagrange_kit/power_series.hpp>
#include <lagrange_kit/series_functions.hpp>

namespace lagrange_kit
{

// The unique f with f = x R(f), through x^{order-1}.
//
// Fixed-point iteration f <- x R(f). Pass p is carried out at order p + 1
// and fixes [x^p] f, so the loop runs order - 1 passes; the result is then
// checked by substitution at full order.
template <CoefficientRing S>
PowerSeries<S> solve_xr(const PowerSeries<S> &R, int order)
{
    if (order < 1) {
        throw InvalidArgument("order must be at least 1");
    }
    if (R.order() + 1 < order) {
        throw OutOfPrecision("R of order " + std::to_string(R.order()) + " determines f only below x^" +
                             std::to_string(R.order() + 1));
    }
    std::vector<S> c(1, S(Rational(0)));
    for (int p = 1; p < order; ++p) {
        // R(f) mod x^p needs f mod x^p only.
        const PowerSeries<S> f(c, p);
        const PowerSeries<S> rf = compose(R.truncated(p), f);
        c.assign(1, S(Rational(0)));
        c.insert(c.end(), rf.coefficients().begin(), rf.coefficients().end());
    }
    PowerSeries<S> f(c, order);
    if (order > 1) {
        const PowerSeries<S> check = compose(R.truncated(order - 1), f.truncated(order - 1)).shifted_up(1);
        if (!(check == f)) {
            throw Error("fixed point check failed for f = xR(f)");
        }
    }
    return f;
}

// Guard of the indeterminate form: every r_n with n > 0 must vanish when the
// parameters are set to 0, otherwise the iteration is not summable.
inline void check_guarded(const std::vector<MultiPoly> &r)
{
    for (std::size_t n = 1; n < r.size(); ++n) {
        if (!r[n].constant_term().is_zero()) {
            throw UnguardedCoefficient("r_" + std::to_string(n) + " = " + r[n].to_string() +
                                       " has a parameter-free term");
        }
    }
}

// sum_n r_n f^n with every product truncated at total degree `degree`.
inline MultiPoly evaluate_truncated(const std::vector<MultiPoly> &r, const MultiPoly &f, int degree)
{
    MultiPoly acc;
    for (std::size_t i = r.size(); i-- > 0;) {
        acc = MultiPoly::multiply(acc, f, degree) + r[i].truncated(degree);
    }
    return acc;
}

// The unique f with f = R(f) = sum_n r_n f^n, where the r_n are polynomials in
// formal parameters and R is read as the polynomial with the listed
// coefficients. The answer is exact through total parameter degree
// `degree_bound`. Pass p is computed modulo degree p + 1.
inline MultiPoly solve_indeterminate(const std::vector<MultiPoly> &r, int degree_bound)
{
    if (degree_bound < 0) {
        throw InvalidArgument("negative degree bound");
    }
    check_guarded(r);
    MultiPoly f;
    for (int p = 0; p <= degree_bound; ++p) {
        f = evaluate_truncated(r, f, p);
    }
    if (!(evaluate_truncated(r, f, degree_bound) == f)) {
        throw Error("fixed point check failed for f = R(f)");
    }
    return f;
}

inline MultiPoly solve_indeterminate(const PowerSeries<MultiPoly> &R, int degree_bound)
{
    return solve_indeterminate(R.coefficients(), degree_bound);
}

// f^k truncated at total degree `degree`.
inline MultiPoly power_truncated(const MultiPoly &f, int k, int degree)
{
    MultiPoly acc(Rational(1));
    for (int i = 0; i < k; ++i) {
        acc = MultiPoly::multiply(acc, f, degree);
    }
    return acc;
}

} // namespace lagrange_kit

#endif
