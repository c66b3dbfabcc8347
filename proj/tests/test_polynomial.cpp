#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "toric/error.hpp"
#include "toric/polynomial.hpp"
#include "toric/properties.hpp"

using namespace toric;
using testing::poly;

TEST_CASE("arithmetic") {
    CHECK((poly(2, "x1 + x2") * poly(2, "x1 - x2")) == poly(2, "x1^2 - x2^2"));
    CHECK((Polynomial::constant(3, 1) * poly(3, "x1*x3 - 4")) == poly(3, "x1*x3 - 4"));
    CHECK((poly(2, "x1*x2") * poly(2, "x2")) == poly(2, "x1*x2^2"));
    CHECK((poly(2, "x1") - poly(2, "x1")).is_zero());
    CHECK(-poly(2, "x1 - 2") == poly(2, "2 - x1"));
    CHECK((poly(2, "x1 + 1") * Integer(0)).is_zero());
    CHECK_THROWS_AS(poly(2, "x1") * poly(3, "x1"), Error);
}

TEST_CASE("canonical order and rendering") {
    // graded lexicographic, x1 largest
    CHECK(to_string(poly(3, "x3 + x1*x2 + 7 + x2^2 + x1^2")) == "x1^2 + x1*x2 + x2^2 + x3 + 7");
    CHECK(to_string(poly(2, "-x2 + 3*x1")) == "3*x1 - x2");
    CHECK(to_string(poly(2, "-1")) == "-1");
    CHECK(to_string(Polynomial(2)) == "0");
    CHECK(to_string(Monomial(3)) == "1");
}

TEST_CASE("degree, homogeneity, support") {
    const auto p = poly(3, "x1^2*x3 + x2^3");
    CHECK(p.degree() == 3);
    CHECK(p.is_homogeneous());
    CHECK_FALSE(poly(3, "x1 + 1").is_homogeneous());
    CHECK(p.variables() == FacetSet{0, 1, 2});
    CHECK(Monomial(std::vector<unsigned>{2, 0, 1}).support() == FacetSet{0, 2});
    CHECK(Monomial::squarefree(3, FacetSet{0, 2}) == Monomial(std::vector<unsigned>{1, 0, 1}));
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_polynomial(3, rng, 3, 9);
        const auto b = random_polynomial(3, rng, 3, 9);
        const auto c = random_polynomial(3, rng, 3, 9);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b - b == a);
    }
}
