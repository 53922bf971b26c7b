#ifndef MERODIFF_DIFFMAT_HPP
#define MERODIFF_DIFFMAT_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "merodiff/linalg.hpp"
#include "merodiff/nodes.hpp"

namespace merodiff {

enum class BasisFamily { Algebraic, Trigonometric, Rational, PeriodicMeromorphic };

// A differentiation matrix together with what it was built from. Applying
// `matrix` to samples f(z_j) yields the order-th derivative of the
// interpolant at the same nodes.
template <ComplexScalar C>
struct DiffMatrix {
    Matrix<C> matrix;
    BasisFamily basis;
    NodeSet<C> nodes;
    std::optional<PoleSet<C>> poles;
    int order = 1;

    std::vector<C> apply(const std::vector<C>& samples) const {
        return mat_vec(matrix, samples);
    }
};

// omega'(z_i) = prod_{k != i} (z_i - z_k), factors in ascending k.
template <ComplexScalar C>
C omega_prime(const NodeSet<C>& nodes, std::size_t i) {
    C p{1};
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (k != i) p *= nodes[i] - nodes[k];
    return p;
}

namespace detail {

// Off-diagonal ratio omega'(z_i)/omega'(z_j) with numerator and denominator
// factors interleaved; the raw products alone can leave double range for
// N around 50.
template <ComplexScalar C>
C omega_ratio(const NodeSet<C>& nodes, std::size_t i, std::size_t j) {
    C acc{1};
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k != i) acc *= nodes[i] - nodes[k];
        if (k != j) acc /= nodes[j] - nodes[k];
    }
    return acc;
}

// Same ratio for the trigonometric family: prod sin((z_i-z_k)/2) over
// prod sin((z_j-z_k)/2).
template <ComplexScalar C>
C sine_ratio(const NodeSet<C>& nodes, std::size_t i, std::size_t j) {
    const C half{real_part_t<C>(0.5)};
    C acc{1};
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k != i) acc *= std::sin((nodes[i] - nodes[k]) * half);
        if (k != j) acc /= std::sin((nodes[j] - nodes[k]) * half);
    }
    return acc;
}

// Order of pole k in the factor at derivative stage `shift`: differentiation
// deepens existing poles one order per stage, but an inert order-0 pole never
// activates.
template <ComplexScalar C>
int staged_order(const Pole<C>& pole, int shift) {
    return pole.order == 0 ? 0 : pole.order + shift;
}

// prod_k ((z_j - a_k)/(z_i - a_k))^{mu_k}, integer powers by squaring.
template <ComplexScalar C>
C pole_ratio(const NodeSet<C>& nodes, const PoleSet<C>& poles, std::size_t i, std::size_t j,
             int order_shift) {
    C acc{1};
    for (std::size_t k = 0; k < poles.size(); ++k) {
        const C r = (nodes[j] - poles[k].location) / (nodes[i] - poles[k].location);
        acc *= pow_int(r, staged_order(poles[k], order_shift));
    }
    return acc;
}

// Diagonal pole correction sum_k mu_k / (z_i - a_k).
template <ComplexScalar C>
C pole_diagonal(const NodeSet<C>& nodes, const PoleSet<C>& poles, std::size_t i,
                int order_shift) {
    C acc{0};
    for (std::size_t k = 0; k < poles.size(); ++k)
        acc += C{real_part_t<C>(staged_order(poles[k], order_shift))} /
               (nodes[i] - poles[k].location);
    return acc;
}

template <ComplexScalar C>
void require_odd_distinct_mod_2pi(const NodeSet<C>& nodes) {
    using R = real_part_t<C>;
    if (nodes.size() % 2 == 0)
        throw EvenNodeCountError("trigonometric basis needs an odd node count");
    const C half{R(0.5)};
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (std::abs(std::sin((nodes[i] - nodes[j]) * half)) <= R(1e-12))
                throw NodesCongruentError("nodes congruent modulo 2*pi");
}

template <ComplexScalar C>
PoleSet<C> shifted(const PoleSet<C>& poles, int shift) {
    std::vector<Pole<C>> ps = poles.poles();
    for (auto& p : ps) p.order += shift;
    return PoleSet<C>(std::move(ps));
}

// Ordered product prod_{k=n-1}^{0} factor(k), folded left to right. The
// composition-consistency tests rebuild exactly this chain with mat_mul.
template <ComplexScalar C, class FactorFn>
Matrix<C> ordered_power_product(int order, FactorFn&& factor) {
    if (order < 1) throw ValidationError("derivative order must be >= 1");
    Matrix<C> acc = factor(order - 1);
    for (int k = order - 2; k >= 0; --k) acc = mat_mul(acc, factor(k));
    return acc;
}

}  // namespace detail

// Derivative of the polynomial interpolant on N nodes; exact for polynomials
// of degree <= N-1.
template <ComplexScalar C>
DiffMatrix<C> algebraic_matrix(const NodeSet<C>& nodes) {
    const std::size_t n = nodes.size();
    Matrix<C> d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        C diag{0};
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) diag += C{1} / (nodes[i] - nodes[k]);
        d(i, i) = diag;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) d(i, j) = detail::omega_ratio(nodes, i, j) / (nodes[i] - nodes[j]);
    }
    detail::ensure_finite(d.data(), "algebraic_matrix");
    return {std::move(d), BasisFamily::Algebraic, nodes, std::nullopt, 1};
}

// Derivative of the trigonometric interpolant (period 2*pi); exact for
// trigonometric polynomials of degree <= (N-1)/2, N odd.
template <ComplexScalar C>
DiffMatrix<C> trigonometric_matrix(const NodeSet<C>& nodes) {
    using R = real_part_t<C>;
    detail::require_odd_distinct_mod_2pi(nodes);
    const std::size_t n = nodes.size();
    const C half{R(0.5)};
    Matrix<C> d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        C diag{0};
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) {
                const C h = (nodes[i] - nodes[k]) * half;
                diag += std::cos(h) / std::sin(h);
            }
        d(i, i) = half * diag;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                d(i, j) = half * detail::sine_ratio(nodes, i, j) /
                          std::sin((nodes[i] - nodes[j]) * half);
    }
    detail::ensure_finite(d.data(), "trigonometric_matrix");
    return {std::move(d), BasisFamily::Trigonometric, nodes, std::nullopt, 1};
}

// Trigonometric matrix specialized to nodes on a vertical line z_k = i*y_k,
// written in real hyperbolic arithmetic. Coincides entrywise with
// trigonometric_matrix at i*y.
template <class R>
DiffMatrix<std::complex<R>> hyperbolic_matrix(const std::vector<R>& imag_parts) {
    using C = std::complex<R>;
    std::vector<C> pts;
    pts.reserve(imag_parts.size());
    for (R y : imag_parts) pts.emplace_back(R(0), y);
    NodeSet<C> nodes(std::move(pts));
    if (nodes.size() % 2 == 0)
        throw EvenNodeCountError("hyperbolic basis needs an odd node count");

    const std::size_t n = nodes.size();
    const C minus_half_i{R(0), R(-0.5)};
    Matrix<C> d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        R diag = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) {
                const R h = (imag_parts[i] - imag_parts[k]) / R(2);
                diag += std::cosh(h) / std::sinh(h);
            }
        d(i, i) = minus_half_i * C{diag};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            R acc = 1;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) acc *= std::sinh((imag_parts[i] - imag_parts[k]) / R(2));
                if (k != j) acc /= std::sinh((imag_parts[j] - imag_parts[k]) / R(2));
            }
            d(i, j) = minus_half_i * C{acc / std::sinh((imag_parts[i] - imag_parts[j]) / R(2))};
        }
    }
    detail::ensure_finite(d.data(), "hyperbolic_matrix");
    return {std::move(d), BasisFamily::Trigonometric, std::move(nodes), std::nullopt, 1};
}

namespace detail {

template <ComplexScalar C>
Matrix<C> rational_entries(const NodeSet<C>& nodes, const PoleSet<C>& poles, int shift) {
    const std::size_t n = nodes.size();
    Matrix<C> d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        C diag{0};
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) diag += C{1} / (nodes[i] - nodes[k]);
        d(i, i) = diag - pole_diagonal(nodes, poles, i, shift);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                d(i, j) = omega_ratio(nodes, i, j) * pole_ratio(nodes, poles, i, j, shift) /
                          (nodes[i] - nodes[j]);
    }
    ensure_finite(d.data(), "rational_matrix");
    return d;
}

template <ComplexScalar C>
Matrix<C> periodic_meromorphic_entries(const NodeSet<C>& nodes, const PoleSet<C>& poles,
                                       int shift) {
    using R = real_part_t<C>;
    const std::size_t n = nodes.size();
    const C half{R(0.5)};
    Matrix<C> d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        C diag{0};
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) {
                const C h = (nodes[i] - nodes[k]) * half;
                diag += std::cos(h) / std::sin(h);
            }
        d(i, i) = half * diag - pole_diagonal(nodes, poles, i, shift);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                d(i, j) = half * sine_ratio(nodes, i, j) * pole_ratio(nodes, poles, i, j, shift) /
                          std::sin((nodes[i] - nodes[j]) * half);
    }
    ensure_finite(d.data(), "periodic_meromorphic_matrix");
    return d;
}

}  // namespace detail

// Derivative matrix for q(z)/prod (z - a_k)^{mu_k} with deg q <= N-1:
// the algebraic entries carry the extra pole-ratio factor, the diagonal the
// correction -sum mu_k/(z_i - a_k).
template <ComplexScalar C>
DiffMatrix<C> rational_matrix(const NodeSet<C>& nodes, const PoleSet<C>& poles) {
    validate_against_poles(nodes, poles);
    return {detail::rational_entries(nodes, poles, 0), BasisFamily::Rational, nodes, poles, 1};
}

// n-th derivative for the rational family: the pole orders grow by one per
// differentiation, so the factors are the matrices at orders mu+n-1, ..., mu,
// multiplied in that order.
template <ComplexScalar C>
DiffMatrix<C> rational_power(const NodeSet<C>& nodes, const PoleSet<C>& poles, int order) {
    validate_against_poles(nodes, poles);
    Matrix<C> m = detail::ordered_power_product<C>(
        order, [&](int k) { return detail::rational_entries(nodes, poles, k); });
    return {std::move(m), BasisFamily::Rational, nodes, poles, order};
}

// Trigonometric analogue of rational_matrix: only the singular pole terms are
// carried over, the smooth part stays trigonometric. For elliptic functions
// sampled along a line this gives approximate derivatives, not exact ones.
template <ComplexScalar C>
DiffMatrix<C> periodic_meromorphic_matrix(const NodeSet<C>& nodes, const PoleSet<C>& poles) {
    detail::require_odd_distinct_mod_2pi(nodes);
    validate_against_poles(nodes, poles);
    return {detail::periodic_meromorphic_entries(nodes, poles, 0),
            BasisFamily::PeriodicMeromorphic, nodes, poles, 1};
}

template <ComplexScalar C>
DiffMatrix<C> periodic_meromorphic_power(const NodeSet<C>& nodes, const PoleSet<C>& poles,
                                         int order) {
    detail::require_odd_distinct_mod_2pi(nodes);
    validate_against_poles(nodes, poles);
    Matrix<C> m = detail::ordered_power_product<C>(
        order, [&](int k) { return detail::periodic_meromorphic_entries(nodes, poles, k); });
    return {std::move(m), BasisFamily::PeriodicMeromorphic, nodes, poles, order};
}

// Lagrange interpolant evaluated at an arbitrary point.
template <ComplexScalar C>
C lagrange_eval(const NodeSet<C>& nodes, std::span<const C> samples, C z) {
    if (samples.size() != nodes.size())
        throw DimensionError("lagrange_eval: sample count disagrees with nodes");
    C total{0};
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        C basis{1};
        for (std::size_t k = 0; k < nodes.size(); ++k)
            if (k != j) basis *= (z - nodes[k]) / (nodes[j] - nodes[k]);
        total += samples[j] * basis;
    }
    return total;
}

// Gauss trigonometric interpolant, odd node count.
template <ComplexScalar C>
C gauss_trig_eval(const NodeSet<C>& nodes, std::span<const C> samples, C z) {
    using R = real_part_t<C>;
    if (samples.size() != nodes.size())
        throw DimensionError("gauss_trig_eval: sample count disagrees with nodes");
    if (nodes.size() % 2 == 0)
        throw EvenNodeCountError("gauss_trig_eval: odd node count required");
    const C half{R(0.5)};
    C total{0};
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        C basis{1};
        for (std::size_t k = 0; k < nodes.size(); ++k)
            if (k != j)
                basis *= std::sin((z - nodes[k]) * half) / std::sin((nodes[j] - nodes[k]) * half);
        total += samples[j] * basis;
    }
    return total;
}

// Single-pole rational interpolant p(z) = sum f(z_j) ((z_j-a)/(z-a))^m l_j(z).
template <ComplexScalar C>
C rational_interp_eval(const NodeSet<C>& nodes, const PoleSet<C>& poles,
                       std::span<const C> samples, C z) {
    using R = real_part_t<C>;
    if (poles.size() != 1)
        throw ValidationError("rational_interp_eval: exactly one pole required");
    if (samples.size() != nodes.size())
        throw DimensionError("rational_interp_eval: sample count disagrees with nodes");
    const C alpha = poles[0].location;
    const int m = poles[0].order;
    if (std::abs(z - alpha) <= R(1e-14) * (std::abs(z) + std::abs(alpha) + R(1)))
        throw PoleProximityError("rational_interp_eval: evaluation point at the pole");
    C total{0};
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        C basis = pow_int((nodes[j] - alpha) / (z - alpha), m);
        for (std::size_t k = 0; k < nodes.size(); ++k)
            if (k != j) basis *= (z - nodes[k]) / (nodes[j] - nodes[k]);
        total += samples[j] * basis;
    }
    return total;
}

// Smallest N for which the order-th derivative of q(z)/prod (z-a_k)^{mu_k}
// (deg q = numer_degree) is produced exactly. Each differentiation raises the
// numerator degree by r-1, which gives the tight bound below; the coarser
// classical bound numer_degree + order*r - 1 is kept alongside for reference.
inline int min_nodes_exact(int numer_degree, std::size_t pole_count, int order) {
    if (numer_degree < 0 || order < 1)
        throw ValidationError("min_nodes_exact: need numer_degree >= 0 and order >= 1");
    const int r = static_cast<int>(pole_count);
    return numer_degree + (order - 1) * (r - 1) + 1;
}

template <ComplexScalar C>
int min_nodes_exact(int numer_degree, const PoleSet<C>& poles, int order) {
    return min_nodes_exact(numer_degree, poles.size(), order);
}

inline int conservative_nodes_bound(int numer_degree, std::size_t pole_count, int order) {
    return numer_degree + order * static_cast<int>(pole_count) - 1;
}

}  // namespace merodiff

#endif
