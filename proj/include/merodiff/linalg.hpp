#ifndef MERODIFF_LINALG_HPP
#define MERODIFF_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "merodiff/errors.hpp"
#include "merodiff/scalar.hpp"

namespace merodiff {

// Dense row-major complex matrix. Summation order in every product below is
// fixed (ascending inner index) so repeated runs are bit-identical.
template <ComplexScalar C>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, C{0}) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = C{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    C& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const C& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<C>& data() { return data_; }
    const std::vector<C>& data() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<C> data_;
};

using CMatrix = Matrix<Complex>;
using CVector = std::vector<Complex>;

template <ComplexScalar C>
real_part_t<C> max_norm(const std::vector<C>& v) {
    if (v.empty()) throw DimensionError("max_norm: empty vector");
    real_part_t<C> m = 0;
    for (const C& x : v) m = std::max(m, std::abs(x));
    return m;
}

// Largest modulus over all entries (used for relative pivot thresholds).
template <ComplexScalar C>
real_part_t<C> max_abs_entry(const Matrix<C>& a) {
    real_part_t<C> m = 0;
    for (const C& x : a.data()) m = std::max(m, std::abs(x));
    return m;
}

// Row-sum norm ||A||_inf.
template <ComplexScalar C>
real_part_t<C> max_row_sum_norm(const Matrix<C>& a) {
    real_part_t<C> m = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        real_part_t<C> s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        m = std::max(m, s);
    }
    return m;
}

namespace detail {

template <ComplexScalar C>
void ensure_finite(const std::vector<C>& v, const char* what) {
    for (const C& x : v)
        if (!is_finite(x)) throw NonFiniteError(std::string(what) + ": non-finite value produced");
}

}  // namespace detail

template <ComplexScalar C>
Matrix<C> mat_mul(const Matrix<C>& a, const Matrix<C>& b) {
    if (a.cols() != b.rows())
        throw DimensionError("mat_mul: inner dimensions disagree");
    Matrix<C> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            C s{0};
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    detail::ensure_finite(c.data(), "mat_mul");
    return c;
}

template <ComplexScalar C>
std::vector<C> mat_vec(const Matrix<C>& a, const std::vector<C>& v) {
    if (a.cols() != v.size())
        throw DimensionError("mat_vec: dimensions disagree");
    std::vector<C> y(a.rows(), C{0});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        C s{0};
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        y[i] = s;
    }
    detail::ensure_finite(y, "mat_vec");
    return y;
}

// LU factorization with partial pivoting by largest modulus. A pivot whose
// modulus falls below pivot_rtol * max|a_ij| (of the matrix as given) marks
// the factorization singular; solve() then refuses, but a null vector of the
// leading block is still recoverable (used by the eigensolver).
template <ComplexScalar C>
class LuFactorization {
public:
    using R = real_part_t<C>;

    explicit LuFactorization(Matrix<C> a, R pivot_rtol = R(1e-14))
        : lu_(std::move(a)), perm_(lu_.rows()) {
        if (lu_.rows() != lu_.cols())
            throw DimensionError("lu: matrix must be square");
        const std::size_t n = lu_.rows();
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});
        threshold_ = pivot_rtol * max_abs_entry(lu_);

        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            R best = std::abs(lu_(k, k));
            for (std::size_t i = k + 1; i < n; ++i) {
                const R m = std::abs(lu_(i, k));
                if (m > best) {
                    best = m;
                    p = i;
                }
            }
            if (best <= threshold_) {
                singular_col_ = k;  // elimination stops at the deficient column
                return;
            }
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
                std::swap(perm_[k], perm_[p]);
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                const C f = lu_(i, k) / lu_(k, k);
                lu_(i, k) = f;
                for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
            }
        }
    }

    bool singular() const { return singular_col_ != SIZE_MAX; }
    std::size_t size() const { return lu_.rows(); }

    std::vector<C> solve(const std::vector<C>& b) const {
        if (singular())
            throw SingularMatrixError("lu_solve: pivot below tolerance at column " +
                                      std::to_string(singular_col_));
        const std::size_t n = size();
        if (b.size() != n) throw DimensionError("lu_solve: rhs length disagrees");
        std::vector<C> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
        for (std::size_t i = 1; i < n; ++i) {
            C s = x[i];
            for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
            x[i] = s;
        }
        for (std::size_t ii = n; ii-- > 0;) {
            C s = x[ii];
            for (std::size_t j = ii + 1; j < n; ++j) s -= lu_(ii, j) * x[j];
            x[ii] = s / lu_(ii, ii);
        }
        detail::ensure_finite(x, "lu_solve");
        return x;
    }

    // Approximate null vector when singular: x with U x = 0 over the leading
    // block, unit entry at the deficient column. Then A x ~ 0.
    std::vector<C> null_vector() const {
        if (!singular()) throw Error("null_vector: factorization is not singular");
        const std::size_t n = size();
        std::vector<C> x(n, C{0});
        const std::size_t k = singular_col_;
        x[k] = C{1};
        for (std::size_t ii = k; ii-- > 0;) {
            C s{0};
            for (std::size_t j = ii + 1; j <= k; ++j) s += lu_(ii, j) * x[j];
            x[ii] = -s / lu_(ii, ii);
        }
        return x;
    }

private:
    Matrix<C> lu_;
    std::vector<std::size_t> perm_;
    R threshold_ = 0;
    std::size_t singular_col_ = SIZE_MAX;
};

template <ComplexScalar C>
std::vector<C> lu_solve(const Matrix<C>& a, const std::vector<C>& b,
                        real_part_t<C> pivot_rtol = real_part_t<C>(1e-14)) {
    return LuFactorization<C>(a, pivot_rtol).solve(b);
}

}  // namespace merodiff

#endif
