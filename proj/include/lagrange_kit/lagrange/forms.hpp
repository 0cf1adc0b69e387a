#ifndef LAGRANGE_KIT_LAGRANGE_FORMS_HPP
#define LAGRANGE_KIT_LAGRANGE_FORMS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/laurent_series.hpp>
#include <lagrange_kit/lagrange/solve.hpp>
#include <lagrange_kit/power_series.hpp>
#include <lagrange_kit/series_functions.hpp>

namespace lagrange_kit
{

enum class InversionForm
{
    A,
    B,
    C,
    D,
    E
};

// [x^n] of phi(f) for f = x R(f), once per inversion form, next to the values
// obtained by solving for f and substituting.
template <CoefficientRing S>
struct FormValues
{
    int n = 0;
    std::optional<S> a; // absent at n = 0
    S b, c, d, e;
    S direct;   // [x^n] phi(f)
    S direct_d; // [x^n] phi(f) / (1 - x R'(f))
    S direct_e; // [x^n] phi(f) / (1 - f R'(f) / R(f))

    bool agree() const
    {
        return (!a || *a == direct) && b == direct && c == direct && d == direct_d && e == direct_e;
    }

    // First form whose value differs from the direct computation.
    std::optional<InversionForm> first_disagreement() const
    {
        if (a && !(*a == direct)) {
            return InversionForm::A;
        }
        if (!(b == direct)) {
            return InversionForm::B;
        }
        if (!(c == direct)) {
            return InversionForm::C;
        }
        if (!(d == direct_d)) {
            return InversionForm::D;
        }
        if (!(e == direct_e)) {
            return InversionForm::E;
        }
        return std::nullopt;
    }
};

namespace detail
{

template <CoefficientRing S>
void require_unit_constant(const PowerSeries<S> &R)
{
    if (R.order() < 1 || !R[0].is_unit()) {
        throw DivisionByNonUnit("R must have an invertible constant term");
    }
}

} // namespace detail

// (1/n) [t^{n-1}] phi'(t) R(t)^n.
template <CoefficientRing S>
S form_a(const LaurentSeries<S> &phi, const PowerSeries<S> &R, int n)
{
    if (n == 0) {
        throw FormAUndefined("form A divides by n");
    }
    detail::require_unit_constant(R);
    return (phi.derivative() * LaurentSeries<S>(R).pow(n)).coeff(n - 1) * Rational(1, n);
}

// [t^n] (1 - t R'(t)/R(t)) phi(t) R(t)^n.
template <CoefficientRing S>
S form_b(const LaurentSeries<S> &phi, const PowerSeries<S> &R, int n)
{
    detail::require_unit_constant(R);
    const PowerSeries<S> weight = PowerSeries<S>::one(R.order()) - R.derivative().shifted_up(1) / R;
    return (LaurentSeries<S>(weight) * phi * LaurentSeries<S>(R).pow(n)).coeff(n);
}

// [x^n] of sum_m x^m [t^m] (1 - x R'(t)) phi(t) R(t)^m, i.e.
// [t^n] phi R^n - [t^{n-1}] R' phi R^{n-1}.
template <CoefficientRing S>
S form_c(const LaurentSeries<S> &phi, const PowerSeries<S> &R, int n)
{
    detail::require_unit_constant(R);
    const LaurentSeries<S> LR(R);
    const S first = (phi * LR.pow(n)).coeff(n);
    const S second = (LaurentSeries<S>(R.derivative()) * phi * LR.pow(n - 1)).coeff(n - 1);
    return first - second;
}

// [t^n] psi(t) R(t)^n; forms D and E share this right-hand side.
template <CoefficientRing S>
S form_d(const LaurentSeries<S> &psi, const PowerSeries<S> &R, int n)
{
    detail::require_unit_constant(R);
    return (psi * LaurentSeries<S>(R).pow(n)).coeff(n);
}

template <CoefficientRing S>
S form_e(const LaurentSeries<S> &psi, const PowerSeries<S> &R, int n)
{
    return form_d(psi, R, n);
}

// Direct substitution: f from the fixed-point solver, then phi(f) and the two
// weighted variants, each exact below the returned orders.
template <CoefficientRing S>
struct DirectSubstitution
{
    PowerSeries<S> f;
    LaurentSeries<S> phi_f;
    LaurentSeries<S> weighted_d;
    LaurentSeries<S> weighted_e;

    DirectSubstitution(const LaurentSeries<S> &phi, const PowerSeries<S> &R, int n_max)
    {
        detail::require_unit_constant(R);
        const int lo = std::min(phi.min_exponent(), 0);
        // Each negative power of f costs one order of precision.
        const int want = std::max(n_max, 0) + 3 - 2 * lo;
        const int order = std::min(want, R.order() + 1);
        f = solve_xr(R, order);
        phi_f = compose(phi, f);
        // R'(f) is known one order below f.
        const int k = std::min(order - 1, R.order() - 1);
        const PowerSeries<S> fk = f.truncated(k);
        const PowerSeries<S> r_prime_f = compose(R.derivative().truncated(k), fk);
        const PowerSeries<S> one = PowerSeries<S>::one(k);
        const PowerSeries<S> denom_d = one - PowerSeries<S>::x(k) * r_prime_f;
        const PowerSeries<S> denom_e = one - fk * r_prime_f / compose(R.truncated(k), fk);
        weighted_d = phi_f * LaurentSeries<S>(denom_d.inverse());
        weighted_e = phi_f * LaurentSeries<S>(denom_e.inverse());
    }
};

template <CoefficientRing S>
FormValues<S> evaluate_forms(const LaurentSeries<S> &phi, const PowerSeries<S> &R, int n,
                             const DirectSubstitution<S> &direct)
{
    FormValues<S> v;
    v.n = n;
    if (n != 0) {
        v.a = form_a(phi, R, n);
    }
    v.b = form_b(phi, R, n);
    v.c = form_c(phi, R, n);
    v.d = form_d(phi, R, n);
    v.e = form_e(phi, R, n);
    v.direct = direct.phi_f.coeff(n);
    v.direct_d = direct.weighted_d.coeff(n);
    v.direct_e = direct.weighted_e.coeff(n);
    return v;
}

// All five forms at one n. Inputs must carry enough precision for [x^n];
// OutOfPrecision is thrown otherwise.
template <CoefficientRing S>
FormValues<S> coeff_all_forms(const LaurentSeries<S> &phi, const PowerSeries<S> &R, int n)
{
    const DirectSubstitution<S> direct(phi, R, n);
    return evaluate_forms(phi, R, n, direct);
}

// Same for n_lo <= n <= n_hi, solving for f once.
template <CoefficientRing S>
std::vector<FormValues<S>> coeff_all_forms(const LaurentSeries<S> &phi, const PowerSeries<S> &R, int n_lo, int n_hi)
{
    const DirectSubstitution<S> direct(phi, R, n_hi);
    std::vector<FormValues<S>> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        out.push_back(evaluate_forms(phi, R, n, direct));
    }
    return out;
}

// [x^0] phi(f) = [t^0] phi + [t^-1] phi'(t) log(R/r_0).
// With rescale disabled R(0) must already be 1.
template <CoefficientRing S>
S constant_term_supplement(const LaurentSeries<S> &phi, const PowerSeries<S> &R, bool rescale = true)
{
    detail::require_unit_constant(R);
    const bool unit_constant = R[0] == S(Rational(1));
    if (!rescale && !unit_constant) {
        throw BadConstantTerm("R(0) must be 1 when rescaling is disabled");
    }
    const PowerSeries<S> normalized = unit_constant ? R : R * R[0].inverse();
    const S constant = phi.coeff(0);
    if (phi.min_exponent() >= 0) {
        return constant;
    }
    return constant + (phi.derivative() * LaurentSeries<S>(log(normalized))).coeff(-1);
}

// [x^m] log(f/x) = (1/m) [t^m] R(t)^m for m >= 1 and R(0) = 1.
template <CoefficientRing S>
S log_f_over_x(const PowerSeries<S> &R, int m)
{
    if (m < 1) {
        throw InvalidArgument("log_f_over_x needs m >= 1");
    }
    if (R.order() < 1 || !(R[0] == S(Rational(1)))) {
        throw BadConstantTerm("log_f_over_x needs R(0) = 1");
    }
    return pow(R.truncated(std::min(R.order(), m + 1)), static_cast<long>(m)).coeff(m) * Rational(1, m);
}

template <CoefficientRing S>
struct SchurJabotinsky
{
    S lhs; // [x^n] f^k
    S rhs; // (k/n) [x^{-k}] g^{-n}
    bool pass() const
    {
        return lhs == rhs;
    }
};

// a_{n,k} = (k/n) b_{-k,-n} for g the compositional inverse of f.
template <CoefficientRing S>
SchurJabotinsky<S> schur_jabotinsky_check(const PowerSeries<S> &f, int n, int k)
{
    if (n == 0) {
        throw InvalidArgument("Schur-Jabotinsky needs n != 0");
    }
    const PowerSeries<S> g = reversion(f);
    SchurJabotinsky<S> r;
    r.lhs = LaurentSeries<S>(f).pow(k).coeff(n);
    r.rhs = LaurentSeries<S>(g).pow(-n).coeff(-k) * Rational(k, n);
    return r;
}

} // namespace lagrange_kit

#endif
