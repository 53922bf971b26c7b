#ifndef MERODIFF_SPECFUN_HPP
#define MERODIFF_SPECFUN_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "merodiff/errors.hpp"
#include "merodiff/scalar.hpp"

namespace merodiff {

// f(z) = (z^7 + z + 1)/z^10 = z^-3 + z^-9 + z^-10 and its first three
// derivatives in closed form.
template <class R>
std::complex<R> rational_test(std::complex<R> z, int order) {
    using C = std::complex<R>;
    if (std::abs(z) == R(0)) throw PoleProximityError("rational_test: pole at 0");
    auto zp = [&](int e) { return pow_int(C{1} / z, e); };
    switch (order) {
        case 0: return zp(3) + zp(9) + zp(10);
        case 1: return R(-3) * zp(4) + R(-9) * zp(10) + R(-10) * zp(11);
        case 2: return R(12) * zp(5) + R(90) * zp(11) + R(110) * zp(12);
        case 3: return R(-60) * zp(6) + R(-990) * zp(12) + R(-1320) * zp(13);
        default: throw ValidationError("rational_test: order must be 0..3");
    }
}

// Complete elliptic integral of the first kind, parameter m in [0,1),
// K(m) = pi / (2 agm(1, sqrt(1-m))).
template <class R>
R elliptic_K(R m) {
    if (!(m >= R(0) && m < R(1)))
        throw ValidationError("elliptic_K: parameter must lie in [0,1)");
    R a = 1, b = std::sqrt(R(1) - m);
    const R eps = std::numeric_limits<R>::epsilon();
    for (int i = 0; i < 64 && std::abs(a - b) > eps * a; ++i) {
        const R an = (a + b) / R(2);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::acos(R(-1)) / (R(2) * a);
}

namespace detail {

// Real-argument sn, cn, dn by the descending Landen transformation: AGM scales
// ahead, arcsine amplitude recursion back. Parameter m in [0,1].
template <class R>
void sncndn_real(R u, R m, R& sn, R& cn, R& dn) {
    if (m == R(0)) {
        sn = std::sin(u);
        cn = std::cos(u);
        dn = R(1);
        return;
    }
    if (m == R(1)) {
        sn = std::tanh(u);
        cn = R(1) / std::cosh(u);
        dn = cn;
        return;
    }
    const R eps = std::numeric_limits<R>::epsilon();
    std::array<R, 64> as, cs;
    R a = 1, b = std::sqrt(R(1) - m);
    as[0] = a;
    cs[0] = std::sqrt(m);
    std::size_t n = 0;
    while (std::abs(cs[n]) > eps * std::abs(as[n]) && n + 1 < as.size()) {
        const R an = (a + b) / R(2);
        const R cn1 = (a - b) / R(2);
        b = std::sqrt(a * b);
        a = an;
        ++n;
        as[n] = a;
        cs[n] = cn1;
    }
    R phi = std::ldexp(a * u, static_cast<int>(n));
    for (std::size_t i = n; i > 0; --i)
        phi = (phi + std::asin(cs[i] / as[i] * std::sin(phi))) / R(2);
    sn = std::sin(phi);
    cn = std::cos(phi);
    dn = std::sqrt(R(1) - m * sn * sn);
}

}  // namespace detail

template <class R>
struct JacobiValues {
    std::complex<R> sn, cn, dn;
};

// sn, cn, dn for complex argument: real-axis values from the Landen
// transformation, extended off the axis with the imaginary-argument addition
// identities over the complementary parameter. Valid away from the pole
// lattice i K' + 2jK + 2ikK'.
template <class R>
JacobiValues<R> jacobi_sn_cn_dn(std::complex<R> z, R m) {
    using C = std::complex<R>;
    if (!(m >= R(0) && m < R(1)))
        throw ValidationError("jacobi_sn_cn_dn: parameter must lie in [0,1)");
    const R K = elliptic_K(m);
    const R Kp = elliptic_K(R(1) - m);
    const R jj = std::round(z.real() / (R(2) * K));
    const R kk = std::round((z.imag() - Kp) / (R(2) * Kp));
    const C nearest_pole{R(2) * K * jj, Kp + R(2) * Kp * kk};
    if (std::abs(z - nearest_pole) <= R(1e-8))
        throw PoleProximityError("jacobi_sn_cn_dn: argument too close to a pole");

    R s, c, d, s1, c1, d1;
    detail::sncndn_real(z.real(), m, s, c, d);
    detail::sncndn_real(z.imag(), R(1) - m, s1, c1, d1);
    const R den = c1 * c1 + m * s * s * s1 * s1;
    const C i{R(0), R(1)};
    JacobiValues<R> out;
    out.sn = (C{s * d1} + i * C{c * d * s1 * c1}) / C{den};
    out.cn = (C{c * c1} - i * C{s * d * s1 * d1}) / C{den};
    out.dn = (C{d * c1 * d1} - i * C{m * s * c * s1}) / C{den};
    return out;
}

// Parameters for the doubly periodic oracles: the Jacobi quarter periods on
// one side, the Weierstrass lattice with its invariants and cached Laurent
// coefficients on the other.
template <class R>
struct EllipticParams {
    using C = std::complex<R>;

    R K = 0, Kprime = 0, modulus_param = 0;
    C omega1{}, omega2{}, g2{}, g3{};
    std::vector<C> wp_coeffs;  // c_2, c_3, ... of the Laurent expansion
    R lattice_min = 0;         // modulus of the shortest nonzero lattice vector

    static EllipticParams jacobi(R m) {
        EllipticParams p;
        p.modulus_param = m;
        p.K = elliptic_K(m);
        p.Kprime = elliptic_K(R(1) - m);
        return p;
    }

    static EllipticParams weierstrass(C om1, C om2, std::size_t coeff_count = 40) {
        EllipticParams p;
        const C tau = om2 / om1;
        if (!(tau.imag() > R(0)))
            throw ValidationError("weierstrass params: need Im(omega2/omega1) > 0");
        p.omega1 = om1;
        p.omega2 = om2;

        const R pi = std::acos(R(-1));
        const C q = std::exp(C{R(0), R(2) * pi} * tau);
        C e4{1}, e6{1};
        C qn{1};
        const R eps = std::numeric_limits<R>::epsilon();
        for (int n = 1; n < 512; ++n) {
            qn *= q;
            const C common = qn / (C{1} - qn);
            const C t4 = R(240) * R(n) * R(n) * R(n) * common;
            const C t6 = R(504) * R(n) * R(n) * R(n) * R(n) * R(n) * common;
            e4 += t4;
            e6 -= t6;
            if (std::abs(t4) < eps * std::abs(e4) && std::abs(t6) < eps * std::abs(e6)) break;
        }
        const R pi4 = pi * pi * pi * pi;
        p.g2 = C{R(4) * pi4 / R(3)} * e4 / pow_int(om1, 4);
        p.g3 = C{R(8) * pi4 * pi * pi / R(27)} * e6 / pow_int(om1, 6);

        p.lattice_min = std::min(std::min(std::abs(om1), std::abs(om2)),
                                 std::min(std::abs(om1 + om2), std::abs(om1 - om2)));

        // c_2 = g2/20, c_3 = g3/28, then the quadratic recurrence.
        p.wp_coeffs.assign(coeff_count, C{0});
        if (coeff_count > 2) p.wp_coeffs[2] = p.g2 / R(20);
        if (coeff_count > 3) p.wp_coeffs[3] = p.g3 / R(28);
        for (std::size_t k = 4; k < coeff_count; ++k) {
            C s{0};
            for (std::size_t mm = 2; mm + 2 <= k; ++mm) s += p.wp_coeffs[mm] * p.wp_coeffs[k - mm];
            p.wp_coeffs[k] = R(3) * s / (R(2 * k + 1) * R(k - 3));
        }
        return p;
    }
};

// Weierstrass P (derivative = 0) or P' (derivative = 1): reduce into the cell
// around the origin, shrink by halving into the Laurent disk, then walk back
// out with the duplication identities for the (P, P') pair.
template <class R>
std::complex<R> weierstrass_p(std::complex<R> z, const EllipticParams<R>& params,
                              int derivative) {
    using C = std::complex<R>;
    if (derivative != 0 && derivative != 1)
        throw ValidationError("weierstrass_p: derivative must be 0 or 1");
    if (params.omega1 == C{0})
        throw ValidationError("weierstrass_p: params lack a lattice");

    const C om1 = params.omega1, om2 = params.omega2;
    const R det = om1.real() * om2.imag() - om1.imag() * om2.real();
    const R ca = (z.real() * om2.imag() - z.imag() * om2.real()) / det;
    const R cb = (om1.real() * z.imag() - om1.imag() * z.real()) / det;
    C w = z - std::round(ca) * om1 - std::round(cb) * om2;
    if (std::abs(w) <= R(1e-8))
        throw PoleProximityError("weierstrass_p: argument too close to a lattice point");

    const R shrink_radius = R(0.25) * params.lattice_min;
    int halvings = 0;
    while (std::abs(w) > shrink_radius) {
        w /= R(2);
        ++halvings;
    }

    C p = C{1} / (w * w);
    C pp = C{-2} / (w * w * w);
    C w_even = w * w;             // w^(2k-2) tracker
    C w_odd = w;                  // w^(2k-3) tracker
    for (std::size_t k = 2; k < params.wp_coeffs.size(); ++k) {
        p += params.wp_coeffs[k] * w_even;
        pp += R(2 * k - 2) * params.wp_coeffs[k] * w_odd;
        w_even *= w * w;
        w_odd *= w * w;
    }

    for (int h = 0; h < halvings; ++h) {
        const C p2 = R(6) * p * p - params.g2 / R(2);  // P''
        const C pnew = R(-2) * p + (p2 * p2) / (R(4) * pp * pp);
        const C ppnew = -pp + p2 * (R(12) * p * pp * pp - p2 * p2) / (R(4) * pp * pp * pp);
        p = pnew;
        pp = ppnew;
    }
    const C out = derivative == 0 ? p : pp;
    if (!is_finite(out)) throw NonFiniteError("weierstrass_p: non-finite value");
    return out;
}

// Confluent hypergeometric M(a,b,z) by its power series. Terminates once the
// term stays below 1e-16 of the partial sum for 50 consecutive terms; gives
// up after 1e4 terms. Arguments in the left half-plane go through
// M(a,b,z) = e^z M(b-a,b,-z) first, which keeps the summed series free of the
// cancellation that otherwise wrecks the result there; the running sum is
// accumulated one precision level up for the same reason.
template <class R>
std::complex<R> kummer_M(std::complex<R> a, std::complex<R> b, std::complex<R> z) {
    using W = std::conditional_t<std::is_same_v<R, double>, long double, R>;
    using CW = std::complex<W>;
    const R br = std::round(b.real());
    if (std::abs(b.imag()) == R(0) && br <= R(0) && std::abs(b.real() - br) <= R(1e-14))
        throw ValidationError("kummer_M: b must not be a non-positive integer");

    CW aw{a.real(), a.imag()}, bw{b.real(), b.imag()}, zw{z.real(), z.imag()};
    CW prefactor{1};
    if (zw.real() < W(0)) {
        prefactor = std::exp(zw);
        aw = bw - aw;
        zw = -zw;
    }

    CW sum{1}, term{1};
    int quiet = 0;
    for (int n = 0; n < 10000; ++n) {
        term *= (aw + CW{W(n)}) * zw / ((bw + CW{W(n)}) * CW{W(n + 1)});
        sum += term;
        if (std::abs(term) < W(1e-16) * std::abs(sum)) {
            if (++quiet >= 50) {
                const CW total = prefactor * sum;
                const std::complex<R> out{static_cast<R>(total.real()),
                                          static_cast<R>(total.imag())};
                if (!is_finite(out)) throw NonFiniteError("kummer_M: non-finite sum");
                return out;
            }
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("kummer_M: series did not settle within 1e4 terms");
}

}  // namespace merodiff

#endif
