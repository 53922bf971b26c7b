#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "merodiff/linalg.hpp"

using namespace merodiff;

namespace {

CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    CMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const Complex& x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

CMatrix random_unit_modulus(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> angle(0, 6.283185307179586);
    CMatrix m(n, n);
    for (Complex& x : m.data()) x = std::polar(1.0, angle(rng));
    return m;
}

}  // namespace

TEST_CASE("mat_mul basics") {
    const CMatrix a = from_rows({{Complex{1, 2}, Complex{3, -1}}, {Complex{0, 1}, Complex{2, 0}}});
    CHECK(mat_mul(CMatrix::identity(2), a) == a);

    const CMatrix swap = from_rows({{0, 1}, {1, 0}});
    const CMatrix swapped = mat_mul(swap, a);
    CHECK(swapped(0, 0) == a(1, 0));
    CHECK(swapped(0, 1) == a(1, 1));
    CHECK(swapped(1, 0) == a(0, 0));
    CHECK(swapped(1, 1) == a(0, 1));

    // two-node algebraic matrix squared: second derivative of linear
    // interpolants vanishes
    const CMatrix d = from_rows({{-1, 1}, {-1, 1}});
    const CMatrix d2 = mat_mul(d, d);
    for (const Complex& x : d2.data()) CHECK(x == Complex{0});

    CHECK_THROWS_AS(mat_mul(CMatrix(2, 3), CMatrix(2, 2)), DimensionError);
}

TEST_CASE("mat_vec basics") {
    const CVector v{Complex{1, 1}, Complex{-2, 0.5}, Complex{0, 3}};
    CHECK(mat_vec(CMatrix::identity(3), v) == v);

    const CVector zero = mat_vec(CMatrix(3, 3), v);
    for (const Complex& x : zero) CHECK(x == Complex{0});

    // algebraic D on nodes {0,1} applied to samples of f(z)=z
    const CMatrix d = from_rows({{-1, 1}, {-1, 1}});
    const CVector df = mat_vec(d, CVector{Complex{0}, Complex{1}});
    CHECK(df[0] == Complex{1});
    CHECK(df[1] == Complex{1});

    CHECK_THROWS_AS(mat_vec(CMatrix(2, 2), CVector(3)), DimensionError);
}

TEST_CASE("lu_solve basics") {
    const CVector b{Complex{5, -2}, Complex{1, 7}};
    CHECK(lu_solve(CMatrix::identity(2), b) == b);

    CMatrix diag(2, 2);
    diag(0, 0) = Complex{2, 0};
    diag(1, 1) = Complex{0, 4};
    const CVector x = lu_solve(diag, CVector{Complex{2, 0}, Complex{0, 4}});
    CHECK(std::abs(x[0] - Complex{1}) < 1e-15);
    CHECK(std::abs(x[1] - Complex{1}) < 1e-15);
}

TEST_CASE("lu_solve recovers a constructed solution") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> u(-1, 1);
    CMatrix a(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) a(i, j) = Complex{u(rng), u(rng)};
        a(i, i) += Complex{6, 0};  // keep it well conditioned
    }
    CVector x_true(5);
    for (Complex& c : x_true) c = Complex{u(rng), u(rng)};
    const CVector b = mat_vec(a, x_true);
    const CVector x = lu_solve(a, b);
    CVector residual = mat_vec(a, x);
    for (std::size_t i = 0; i < 5; ++i) residual[i] -= b[i];
    CHECK(max_norm(residual) <= 1e-12 * max_norm(b));
}

TEST_CASE("lu_solve flags singular matrices") {
    CMatrix a(2, 2);
    a(0, 0) = Complex{1};
    a(0, 1) = Complex{2};
    a(1, 0) = Complex{2};
    a(1, 1) = Complex{4};
    CHECK_THROWS_AS(lu_solve(a, CVector{Complex{1}, Complex{1}}), SingularMatrixError);

    LuFactorization<Complex> lu(a);
    CHECK(lu.singular());
    const CVector nv = lu.null_vector();
    const CVector av = mat_vec(a, nv);
    CHECK(max_norm(av) <= 1e-12 * max_norm(nv));
}

TEST_CASE("max_norm") {
    CHECK(max_norm(CVector{Complex{0}, Complex{0}, Complex{0}}) == 0.0);
    CHECK(max_norm(CVector{Complex{3, 4}, Complex{1, 0}}) == doctest::Approx(5.0));
    CHECK(max_norm(CVector{Complex{1}, Complex{-2, 0}, Complex{0, 2}}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(max_norm(CVector{}), DimensionError);
}

TEST_CASE("property: (A*B)*v == A*(B*v) for well-conditioned random matrices") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix a = random_unit_modulus(10, rng);
        const CMatrix b = random_unit_modulus(10, rng);
        CVector v(10);
        std::uniform_real_distribution<double> u(-1, 1);
        for (Complex& c : v) c = Complex{u(rng), u(rng)};
        const CVector left = mat_vec(mat_mul(a, b), v);
        const CVector right = mat_vec(a, mat_vec(b, v));
        CVector diff(10);
        for (std::size_t i = 0; i < 10; ++i) diff[i] = left[i] - right[i];
        CHECK(max_norm(diff) <= 1e-12 * std::max(max_norm(left), 1.0));
    }
}

TEST_CASE("property: lu_solve(A, A*x) recovers x for diagonally dominant A up to N=50") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    for (std::size_t n : {5u, 20u, 50u}) {
        CMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            double off = 0;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = Complex{u(rng), u(rng)};
                if (j != i) off += std::abs(a(i, j));
            }
            a(i, i) = Complex{off + 1, off + 1};
        }
        CVector x_true(n);
        for (Complex& c : x_true) c = Complex{u(rng), u(rng)};
        const CVector x = lu_solve(a, mat_vec(a, x_true));
        CVector diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - x_true[i];
        CHECK(max_norm(diff) <= 1e-10 * max_norm(x_true));
    }
}

TEST_CASE("property: max_norm is absolutely homogeneous") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        CVector v(7);
        for (Complex& x : v) x = Complex{u(rng), u(rng)};
        const Complex c{u(rng), u(rng)};
        CVector cv = v;
        for (Complex& x : cv) x *= c;
        CHECK(max_norm(cv) == doctest::Approx(std::abs(c) * max_norm(v)).epsilon(1e-14));
    }
}
