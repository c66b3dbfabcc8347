#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "toric/error.hpp"
#include "toric/properties.hpp"

using namespace toric;
using testing::load;
using testing::poly;
using testing::sector;

namespace {

Rational q(long p, long r) { return Rational(p, r); }

std::size_t vertex_index(const FaceComplex& fc, const FacetSet& facets) {
    for (std::size_t k = 0; k < fc.vertices.size(); ++k)
        if (fc.vertices[k].facets == facets) return k;
    FAIL("no such vertex");
    return 0;
}

} // namespace

TEST_CASE("restrict: examples") {
    const auto ring = ChenRuanRing::from_polytope(load("p2_112.poly"));
    const NHRing nh(ring);
    const auto& fc = ring.complex();
    const std::size_t v12 = vertex_index(fc, {0, 1}), v13 = vertex_index(fc, {0, 2}), v23 = vertex_index(fc, {1, 2});

    const auto s = nh.restrict(ring.identity_of(1));
    CHECK(s.components.size() == 1);
    CHECK(s.components.at({1, v12}) == Polynomial::constant(3, 1));

    const auto u = nh.restrict(ring.unit());
    CHECK(u.components.size() == 3);
    for (std::size_t v = 0; v < 3; ++v) CHECK(u.components.at({0, v}) == Polynomial::constant(3, 1));

    const auto x3 = nh.restrict(ring.make(0, poly(3, "x3")));
    CHECK(x3.components.size() == 2);
    CHECK(x3.components.at({0, v13}) == poly(3, "x3"));
    CHECK(x3.components.at({0, v23}) == poly(3, "x3"));
}

TEST_CASE("star product: examples") {
    const auto r112 = ChenRuanRing::from_polytope(load("p2_112.poly"));
    const NHRing nh(r112);
    const auto& fc = r112.complex();
    const auto ss = nh.multiply(nh.restrict(r112.identity_of(1)), nh.restrict(r112.identity_of(1)));
    CHECK(ss.components.size() == 1);
    CHECK(ss.components.at({0, vertex_index(fc, {0, 1})}) == poly(3, "x1*x2"));
    CHECK(ss == nh.restrict(r112.make(0, poly(3, "x1*x2"))));

    const auto n = nh.restrict(r112.make(1, poly(3, "3*x1^2 - x2")));
    CHECK(nh.multiply(nh.restrict(r112.unit()), n) == n);

    const auto r124 = ChenRuanRing::from_polytope(load("p2_124.poly"));
    const NHRing nh4(r124);
    const std::size_t xi2 = *r124.sectors().index_of(sector({q(1, 2), 0, 0}));
    const auto a = nh4.restrict(r124.identity_of(xi2));
    const auto sq = nh4.multiply(a, a);
    const auto& fc4 = r124.complex();
    CHECK(sq.components.size() == 2);
    CHECK(sq.components.at({0, vertex_index(fc4, {0, 1})}) == poly(3, "x1"));
    CHECK(sq.components.at({0, vertex_index(fc4, {0, 2})}) == poly(3, "x1"));
}

TEST_CASE("star product rejects malformed classes") {
    const auto ring = ChenRuanRing::from_polytope(load("p2_112.poly"));
    const NHRing nh(ring);
    const std::size_t v23 = vertex_index(ring.complex(), {1, 2});
    NHClass off_face{3, {{{1, v23}, Polynomial::constant(3, 1)}}};
    CHECK_THROWS_WITH_AS(nh.multiply(off_face, nh.restrict(ring.unit())), doctest::Contains("ShapeMismatch"), Error);
    NHClass foreign_var{3, {{{0, v23}, poly(3, "x1")}}};
    CHECK_THROWS_WITH_AS(nh.multiply(foreign_var, foreign_var), doctest::Contains("ShapeMismatch"), Error);
    NHClass no_sector{3, {{{7, 0}, Polynomial::constant(3, 1)}}};
    CHECK_THROWS_AS(nh.multiply(no_sector, no_sector), Error);
}

TEST_CASE("restriction is a homomorphism on sector identities") {
    for (const char* name : {"p2_112.poly", "p2_124.poly", "square.poly"}) {
        const auto ring = ChenRuanRing::from_polytope(load(name));
        const NHRing nh(ring);
        for (std::size_t g = 0; g < ring.sectors().size(); ++g)
            for (std::size_t h = 0; h < ring.sectors().size(); ++h)
                CHECK(nh.check_homomorphism(ring.identity_of(g), ring.identity_of(h)));
    }
}

TEST_CASE("restriction: linearity, homomorphism and associativity on random classes") {
    std::mt19937_64 rng(47);
    for (const char* name : {"p2_112.poly", "p2_124.poly", "square.poly", "cp2.poly"}) {
        const auto ring = ChenRuanRing::from_polytope(load(name));
        const NHRing nh(ring);
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_class(ring, rng), b = random_class(ring, rng), c = random_class(ring, rng);
            CHECK(nh.restrict(a + b) == nh.restrict(a) + nh.restrict(b));
            CHECK(nh.check_homomorphism(a, b));
            const auto ra = nh.restrict(a), rb = nh.restrict(b), rc = nh.restrict(c);
            CHECK(nh.multiply(nh.multiply(ra, rb), rc) == nh.multiply(ra, nh.multiply(rb, rc)));
        }
    }
}

TEST_CASE("module_basis matches brute force") {
    for (const char* name : {"p2_124.poly", "square.poly"}) {
        const auto ring = ChenRuanRing::from_polytope(load(name));
        const auto& fc = ring.complex();
        const std::size_t m = fc.num_facets;
        for (std::size_t k = 0; k < ring.sectors().size(); ++k) {
            const auto& pres = ring.sectors().module(k);
            const auto basis = module_basis(pres, 3);
            std::size_t count = 0;
            std::vector<unsigned> e(m, 0);
            while (true) {
                unsigned deg = 0;
                for (unsigned x : e) deg += x;
                Monomial mono(e);
                if (deg <= 3 && fc.is_face(mono.support() | ring.sectors()[k].support())) {
                    ++count;
                    CHECK(std::find(basis.begin(), basis.end(), mono) != basis.end());
                }
                std::size_t i = 0;
                while (i < m && ++e[i] == 4) e[i++] = 0;
                if (i == m) break;
            }
            CHECK(basis.size() == count);
        }
    }
}

TEST_CASE("injectivity_rank_check") {
    const auto r112 = ChenRuanRing::from_polytope(load("p2_112.poly"));
    const auto rep = injectivity_rank_check(r112, 3);
    CHECK(rep.injective());
    CHECK(rep.degree_bound == 3);
    CHECK(rep.sectors.size() == 2);
    for (const auto& s : rep.sectors) {
        CHECK(s.rank == s.columns);
        CHECK_FALSE(s.kernel_witness.has_value());
        CHECK_FALSE(s.unimodular_over_z.has_value());
    }
    for (const char* name : {"p2_124.poly", "square.poly", "cp1.poly", "cp2.poly", "cp3.poly"}) {
        const auto ring = ChenRuanRing::from_polytope(load(name));
        for (unsigned d = 0; d <= 4; ++d) CHECK(injectivity_rank_check(ring, d).injective());
    }
    const auto strict = injectivity_rank_check(ChenRuanRing::from_polytope(load("cp2.poly")), 3, true);
    CHECK(strict.injective());
    for (const auto& s : strict.sectors) CHECK(s.unimodular_over_z == true);
}
