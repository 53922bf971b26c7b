#ifndef MERODIFF_SCALAR_HPP
#define MERODIFF_SCALAR_HPP

#include <cmath>
#include <complex>
#include <type_traits>

namespace merodiff {

// All numeric code in this library is written against std::complex<R> for a
// floating-point R, never against a hard-coded double. Swapping R (e.g. to
// long double, or a user-provided type with the same field operations,
// conj/abs and comparison by modulus) re-instantiates every kernel. The
// reproduction harnesses use the long double instantiation internally.
template <class T>
struct is_complex_scalar : std::false_type {};

template <class R>
struct is_complex_scalar<std::complex<R>> : std::true_type {};

template <class C>
concept ComplexScalar = is_complex_scalar<C>::value;

template <ComplexScalar C>
using real_part_t = typename C::value_type;

// Default scalar used by the CLI, serialization and python bindings.
using Real = double;
using Complex = std::complex<Real>;

template <ComplexScalar C>
bool is_finite(const C& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Integer power by repeated squaring. Exponent >= 0. Used for the pole-ratio
// factors ((z_j - a)/(z_i - a))^mu, which must stay single-valued: no logs.
template <ComplexScalar C>
C pow_int(C base, int exponent) {
    C result{1};
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

}  // namespace merodiff

#endif
