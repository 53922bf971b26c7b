#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "merodiff/diffmat.hpp"
#include "merodiff/serialize.hpp"

using namespace merodiff;

TEST_CASE("format_g17 round-trips doubles") {
    for (double x : {0.657, 7.42e-4, 1.0 / 3.0, 1.8540746773013719, -2370.0, 0.0})
        CHECK(std::stod(format_g17(x)) == x);
    CHECK(format_g17(0.5) == "0.5");
}

TEST_CASE("basis names") {
    for (BasisFamily b : {BasisFamily::Algebraic, BasisFamily::Trigonometric,
                          BasisFamily::Rational, BasisFamily::PeriodicMeromorphic})
        CHECK(basis_from_name(basis_name(b)) == b);
    CHECK_THROWS_AS(basis_from_name("chebyshev"), ValidationError);
}

TEST_CASE("samples JSON round trip") {
    const CVector v{Complex{1, -2}, Complex{0.125, 3}};
    const CVector back = samples_from_json(samples_to_json(v));
    CHECK(back == v);
}

TEST_CASE("DiffMatrix JSON round trip preserves entries bit for bit") {
    const auto nodes = segment_nodes(Complex{1, 1}, 0.5, 1.0, 5);
    const PoleSet<Complex> poles(std::vector<Pole<Complex>>{{Complex{0}, 2}});
    const auto d = rational_power(nodes, poles, 2);
    const auto j = diffmatrix_to_json(d);
    CHECK(j["basis"] == "rational");
    CHECK(j["order"] == 2);
    CHECK(j["matrix"].size() == 25);

    const auto back = diffmatrix_from_json(j);
    CHECK(back.basis == d.basis);
    CHECK(back.order == d.order);
    CHECK(back.matrix == d.matrix);
    REQUIRE(back.poles.has_value());
    CHECK(back.poles->size() == 1);

    // pole-free bases omit the "poles" key
    const auto ja = diffmatrix_to_json(algebraic_matrix(nodes));
    CHECK_FALSE(ja.contains("poles"));
    const auto back_a = diffmatrix_from_json(ja);
    CHECK_FALSE(back_a.poles.has_value());
}
