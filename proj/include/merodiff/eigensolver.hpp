#ifndef MERODIFF_EIGENSOLVER_HPP
#define MERODIFF_EIGENSOLVER_HPP

#include <cstddef>
#include <vector>

#include "merodiff/diffmat.hpp"
#include "merodiff/linalg.hpp"
#include "merodiff/nodes.hpp"

namespace merodiff {

template <ComplexScalar C>
struct EigenPair {
    C lambda{};
    std::vector<C> vector;  // gauged: largest-modulus entry is exactly 1+0i
    int iterations = 0;
    real_part_t<C> residual = 0;  // ||A v - lambda v||_inf / ||v||_inf
};

// L = Z D^2 + (b I - Z) D with Z = diag(z). Both diagonal factors act as row
// scalings, so only one explicit matrix product is needed.
template <ComplexScalar C>
Matrix<C> build_kummer_operator(const std::vector<C>& z_diag, C b, const Matrix<C>& d) {
    if (d.rows() != d.cols()) throw DimensionError("build_kummer_operator: D must be square");
    if (z_diag.size() != d.rows())
        throw DimensionError("build_kummer_operator: diagonal length disagrees with D");
    const Matrix<C> d2 = mat_mul(d, d);
    const std::size_t n = d.rows();
    Matrix<C> l(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            l(i, j) = z_diag[i] * d2(i, j) + (b - z_diag[i]) * d(i, j);
    return l;
}

template <ComplexScalar C>
Matrix<C> build_kummer_operator(const NodeSet<C>& nodes, C b, const DiffMatrix<C>& d) {
    if (d.matrix.rows() != nodes.size())
        throw DimensionError("build_kummer_operator: matrix dimension disagrees with nodes");
    return build_kummer_operator(nodes.points(), b, d.matrix);
}

namespace detail {

template <ComplexScalar C>
C rayleigh_quotient(const Matrix<C>& a, const std::vector<C>& v) {
    const std::vector<C> av = mat_vec(a, v);
    C num{0}, den{0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        num += std::conj(v[i]) * av[i];
        den += std::conj(v[i]) * v[i];
    }
    return num / den;
}

// First index attaining the largest modulus; scaling by that entry fixes the
// free complex factor of an eigenvector.
template <ComplexScalar C>
std::size_t gauge_index(const std::vector<C>& v) {
    std::size_t best = 0;
    real_part_t<C> mod = std::abs(v[0]);
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > mod) {
            mod = std::abs(v[i]);
            best = i;
        }
    return best;
}

template <ComplexScalar C>
void gauge_max_entry(std::vector<C>& v) {
    const C pivot = v[gauge_index(v)];
    for (C& x : v) x /= pivot;
    v[gauge_index(v)] = C{1};  // exact 1+0i at the gauge entry
}

}  // namespace detail

// Inverse power iteration for the eigenpair of smallest modulus: factor A
// once, iterate v <- solve(A, v) normalized, Rayleigh-quotient estimates,
// stop when successive estimates differ by less than tol AND the residual
// passes. A singular factorization means an eigenvalue sits at zero within
// pivot tolerance; that pair is reported directly from the factorization.
template <ComplexScalar C>
EigenPair<C> smallest_eigenpair(const Matrix<C>& a, real_part_t<C> tol = real_part_t<C>(1e-12),
                                int max_iter = 500) {
    using R = real_part_t<C>;
    if (a.rows() != a.cols()) throw DimensionError("smallest_eigenpair: matrix must be square");
    const std::size_t n = a.rows();
    const R norm_a = max_row_sum_norm(a);
    const R residual_bound = R(10) * tol * norm_a;

    LuFactorization<C> lu(a);
    if (lu.singular()) {
        EigenPair<C> out;
        out.lambda = C{0};
        out.vector = lu.null_vector();
        detail::gauge_max_entry(out.vector);
        out.iterations = 0;
        out.residual = max_norm(mat_vec(a, out.vector)) / max_norm(out.vector);
        return out;
    }

    std::vector<C> v(n, C{1});
    C lambda_prev = detail::rayleigh_quotient(a, v);
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<C> w = lu.solve(v);
        const R nw = max_norm(w);
        if (nw == R(0)) throw SingularMatrixError("smallest_eigenpair: zero iterate");
        for (C& x : w) x /= nw;
        v = std::move(w);
        const C lambda = detail::rayleigh_quotient(a, v);
        if (std::abs(lambda - lambda_prev) < tol) {
            std::vector<C> av = mat_vec(a, v);
            for (std::size_t i = 0; i < n; ++i) av[i] -= lambda * v[i];
            const R res = max_norm(av) / max_norm(v);
            if (res <= residual_bound) {
                EigenPair<C> out;
                out.lambda = lambda;
                out.vector = std::move(v);
                detail::gauge_max_entry(out.vector);
                out.iterations = it;
                std::vector<C> av2 = mat_vec(a, out.vector);
                for (std::size_t i = 0; i < n; ++i) av2[i] -= lambda * out.vector[i];
                out.residual = max_norm(av2) / max_norm(out.vector);
                return out;
            }
        }
        lambda_prev = lambda;
    }
    throw ConvergenceError("smallest_eigenpair: no convergence within " +
                           std::to_string(max_iter) + " iterations");
}

}  // namespace merodiff

#endif
