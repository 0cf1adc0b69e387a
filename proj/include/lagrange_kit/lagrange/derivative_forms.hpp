#ifndef LAGRANGE_KIT_LAGRANGE_DERIVATIVE_FORMS_HPP
#define LAGRANGE_KIT_LAGRANGE_DERIVATIVE_FORMS_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/power_series.hpp>
#include <lagrange_kit/rational.hpp>

namespace lagrange_kit
{

// A series in z whose coefficients are truncated series in x, z^0 .. z^{size-1}.
// The x-orders may differ between entries: every derivative in x costs one order.
template <CoefficientRing S>
using ZSeries = std::vector<PowerSeries<S>>;

namespace detail
{

template <CoefficientRing S>
PowerSeries<S> common(const PowerSeries<S> &a, int order)
{
    return a.order() == order ? a : a.truncated(order);
}

template <CoefficientRing S>
PowerSeries<S> mul(const PowerSeries<S> &a, const PowerSeries<S> &b)
{
    const int n = std::min(a.order(), b.order());
    return common(a, n) * common(b, n);
}

template <CoefficientRing S>
PowerSeries<S> add(const PowerSeries<S> &a, const PowerSeries<S> &b)
{
    const int n = std::min(a.order(), b.order());
    return common(a, n) + common(b, n);
}

template <CoefficientRing S>
PowerSeries<S> sub(const PowerSeries<S> &a, const PowerSeries<S> &b)
{
    const int n = std::min(a.order(), b.order());
    return common(a, n) - common(b, n);
}

template <CoefficientRing S>
PowerSeries<S> nth_derivative(PowerSeries<S> a, int m)
{
    for (int i = 0; i < m; ++i) {
        a = a.derivative();
    }
    return a;
}

template <CoefficientRing S>
ZSeries<S> z_mul(const ZSeries<S> &a, const ZSeries<S> &b, std::size_t terms)
{
    ZSeries<S> out;
    for (std::size_t m = 0; m < terms; ++m) {
        PowerSeries<S> acc;
        bool first = true;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i >= a.size() || m - i >= b.size()) {
                continue;
            }
            const PowerSeries<S> t = mul(a[i], b[m - i]);
            acc = first ? t : add(acc, t);
            first = false;
        }
        out.push_back(acc);
    }
    return out;
}

template <CoefficientRing S>
ZSeries<S> z_add(const ZSeries<S> &a, const ZSeries<S> &b)
{
    ZSeries<S> out;
    for (std::size_t m = 0; m < std::min(a.size(), b.size()); ++m) {
        out.push_back(add(a[m], b[m]));
    }
    return out;
}

// 1 / a for a with z^0 coefficient 1.
template <CoefficientRing S>
ZSeries<S> z_inverse(const ZSeries<S> &a)
{
    ZSeries<S> out{PowerSeries<S>::one(a.front().order())};
    for (std::size_t m = 1; m < a.size(); ++m) {
        PowerSeries<S> acc = PowerSeries<S>::zero(a.front().order());
        for (std::size_t i = 1; i <= m; ++i) {
            acc = add(acc, mul(a[i], out[m - i]));
        }
        out.push_back(-acc);
    }
    return out;
}

// sum_j phi^{(j)}(x) delta^j / j!, with delta = O(z).
template <CoefficientRing S>
ZSeries<S> taylor_compose(const PowerSeries<S> &phi, const ZSeries<S> &delta)
{
    const std::size_t terms = delta.size();
    ZSeries<S> out(terms, PowerSeries<S>::zero(phi.order()));
    ZSeries<S> power(terms, PowerSeries<S>::zero(phi.order()));
    power[0] = PowerSeries<S>::one(phi.order());
    PowerSeries<S> dj = phi;
    for (std::size_t j = 0; j < terms; ++j) {
        const S scale(Rational(1) / Rational(factorial(static_cast<long>(j))));
        for (std::size_t m = 0; m < terms; ++m) {
            out[m] = add(out[m], mul(dj, power[m]) * scale);
        }
        power = z_mul(power, delta, terms);
        dj = dj.derivative();
    }
    return out;
}

} // namespace detail

// Index of the first z-power where a and b differ through their common
// x-order, or -1.
template <CoefficientRing S>
int first_z_mismatch(const ZSeries<S> &a, const ZSeries<S> &b)
{
    for (std::size_t m = 0; m < std::min(a.size(), b.size()); ++m) {
        const int n = std::min(a[m].order(), b[m].order());
        if (!(detail::common(a[m], n) == detail::common(b[m], n))) {
            return static_cast<int>(m);
        }
    }
    return -1;
}

// The solution of f = x + z H(f), returned as delta = f - x through z^{z_terms-1}.
template <CoefficientRing S>
ZSeries<S> solve_shift(const PowerSeries<S> &H, std::size_t z_terms)
{
    ZSeries<S> delta(z_terms, PowerSeries<S>::zero(H.order()));
    for (std::size_t pass = 0; pass < z_terms; ++pass) {
        const ZSeries<S> h = detail::taylor_compose(H, delta);
        ZSeries<S> next{PowerSeries<S>::zero(H.order())};
        for (std::size_t m = 1; m < z_terms; ++m) {
            next.push_back(h[m - 1]);
        }
        delta = next;
    }
    return delta;
}

template <CoefficientRing S>
struct DerivativeForms
{
    ZSeries<S> d1;         // phi(f), first form
    ZSeries<S> d2;         // phi(f), second form
    ZSeries<S> d3;         // psi(f) / (1 - z H'(f))
    ZSeries<S> direct_phi; // phi(f) by substitution
    ZSeries<S> direct_psi; // psi(f) / (1 - z H'(f)) by substitution

    bool agree() const
    {
        return first_z_mismatch(d1, direct_phi) < 0 && first_z_mismatch(d2, direct_phi) < 0 &&
               first_z_mismatch(d3, direct_psi) < 0;
    }
};

// The three derivative expansions for G = z H(x), through z^{z_order}.
template <CoefficientRing S>
DerivativeForms<S> derivative_forms(const PowerSeries<S> &phi, const PowerSeries<S> &psi, const PowerSeries<S> &H,
                                    int z_order)
{
    using detail::mul;
    using detail::nth_derivative;
    using detail::sub;
    if (z_order < 0) {
        throw InvalidArgument("negative z order");
    }
    DerivativeForms<S> out;
    PowerSeries<S> h_power = PowerSeries<S>::one(H.order()); // H^m / m!
    PowerSeries<S> h_prev = h_power;                         // H^{m-1} / (m-1)!
    const PowerSeries<S> h_prime = H.derivative();
    for (int m = 0; m <= z_order; ++m) {
        if (m == 0) {
            out.d1.push_back(phi);
            out.d2.push_back(phi);
        } else {
            h_prev = h_power;
            h_power = mul(h_power, H) * S(Rational(1, m));
            out.d1.push_back(sub(nth_derivative(mul(phi, h_power), m),
                                 nth_derivative(mul(mul(phi, h_prime), h_prev), m - 1)));
            out.d2.push_back(nth_derivative(mul(phi.derivative(), h_power), m - 1));
        }
        out.d3.push_back(nth_derivative(mul(psi, h_power), m));
    }
    const std::size_t terms = static_cast<std::size_t>(z_order) + 1;
    const ZSeries<S> delta = solve_shift(H, terms);
    out.direct_phi = detail::taylor_compose(phi, delta);
    ZSeries<S> denom = detail::taylor_compose(h_prime, delta);
    // 1 - z H'(f)
    ZSeries<S> shifted{PowerSeries<S>::one(h_prime.order())};
    for (std::size_t m = 1; m < terms; ++m) {
        shifted.push_back(-denom[m - 1]);
    }
    out.direct_psi = detail::z_mul(detail::taylor_compose(psi, delta), detail::z_inverse(shifted), terms);
    return out;
}

struct CauchyCheck
{
    bool first = false;  // convolution with D^{n-m}(psi H^{n-m})
    bool second = false; // convolution of two phi'-type terms
    bool pass() const
    {
        return first && second;
    }
};

namespace detail
{

// D^{m-1}(phi' H^m), read as phi at m = 0.
template <CoefficientRing S>
PowerSeries<S> cauchy_term(const PowerSeries<S> &phi, const PowerSeries<S> &H, int m)
{
    if (m == 0) {
        return phi;
    }
    PowerSeries<S> h = PowerSeries<S>::one(H.order());
    for (int i = 0; i < m; ++i) {
        h = mul(h, H);
    }
    return nth_derivative(mul(phi.derivative(), h), m - 1);
}

} // namespace detail

template <CoefficientRing S>
CauchyCheck cauchy_convolution_check(const PowerSeries<S> &phi, const PowerSeries<S> &psi, const PowerSeries<S> &H,
                                     int n)
{
    using detail::add;
    using detail::mul;
    using detail::nth_derivative;
    if (n < 0) {
        throw InvalidArgument("negative n");
    }
    auto h_pow = [&](int m) {
        PowerSeries<S> h = PowerSeries<S>::one(H.order());
        for (int i = 0; i < m; ++i) {
            h = mul(h, H);
        }
        return h;
    };
    auto same = [](const PowerSeries<S> &a, const PowerSeries<S> &b) {
        const int k = std::min(a.order(), b.order());
        return detail::common(a, k) == detail::common(b, k);
    };
    PowerSeries<S> lhs1 = PowerSeries<S>::zero(phi.order());
    PowerSeries<S> lhs2 = PowerSeries<S>::zero(phi.order());
    for (int m = 0; m <= n; ++m) {
        const S c(Rational(binomial(n, m)));
        const PowerSeries<S> left = detail::cauchy_term(phi, H, m);
        lhs1 = add(lhs1, mul(left, nth_derivative(mul(psi, h_pow(n - m)), n - m)) * c);
        lhs2 = add(lhs2, mul(left, detail::cauchy_term(psi, H, n - m)) * c);
    }
    const PowerSeries<S> phi_psi = mul(phi, psi);
    CauchyCheck r;
    r.first = same(lhs1, nth_derivative(mul(phi_psi, h_pow(n)), n));
    r.second = same(lhs2, detail::cauchy_term(phi_psi, H, n));
    return r;
}

} // namespace lagrange_kit

#endif
