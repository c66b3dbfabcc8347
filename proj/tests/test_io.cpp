#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "toric/properties.hpp"
#include "toric/report.hpp"

using namespace toric;
using testing::load;
using testing::poly;

namespace {

void check_parse_error(const std::string& text, std::size_t line, std::size_t column) {
    CAPTURE(text);
    try {
        io::parse_polytope(text);
        FAIL("no error");
    } catch (const io::ParseError& e) {
        CHECK(e.condition() == "ParseError");
        CHECK(e.line() == line);
        CHECK(e.column() == column);
    }
}

} // namespace

TEST_CASE("parse_polytope") {
    const auto p = io::parse_polytope("# P2(1,1,2)\n"
                                      "dimension 2\n"
                                      "\n"
                                      "facet normal=0,1 label=1 offset=0   # y >= 0\n"
                                      "facet normal=-2,-1 label=1 offset=2\n"
                                      "facet normal=1,0 label=1 offset=0\n");
    CHECK(p.dim == 2);
    CHECK(p.num_facets() == 3);
    CHECK(p.normals[1] == std::vector<Integer>{-2, -1});
    CHECK(p.offsets[1] == Rational(2));
    CHECK(weight_matrix(p) == IntMatrix{{0, -2, 1}, {1, -1, 0}});

    const auto r = io::parse_polytope("dimension 1\nfacet normal=1 label=3 offset=-1/2\nfacet normal=-1 label=1 offset=7/3\n");
    CHECK(r.offsets[0] == Rational(-1, 2));
    CHECK(r.labels[0] == 3);
}

TEST_CASE("parse errors carry positions") {
    check_parse_error("facet normal=1 label=1 offset=0\n", 1, 1);
    check_parse_error("dimension 2\nfacet normal=1,0 label=1\n", 2, 1);
    check_parse_error("dimension 2\nfacet normal=1,x label=1 offset=0\n", 2, 16);
    check_parse_error("dimension 2\nfacet normal=1,0 label=1 offset=0\nfacet normal=1 label=1 offset=0\n", 3, 14);
    check_parse_error("dimension 2\nfacet normal=1,0 label=0 offset=0\n", 2, 24);
    check_parse_error("dimension 2\nbogus\n", 2, 1);
    check_parse_error("dimension two\n", 1, 11);
}

TEST_CASE("write/parse round trip") {
    for (const char* name : {"p2_112.poly", "p2_124.poly", "square.poly", "cp3.poly", "pyramid.poly"}) {
        const auto p = load(name);
        const auto back = io::parse_polytope(io::write_polytope(p));
        CHECK(back.dim == p.dim);
        CHECK(back.normals == p.normals);
        CHECK(back.labels == p.labels);
        CHECK(back.offsets == p.offsets);
    }
}

TEST_CASE("read_polytope_file reports missing files") {
    CHECK_THROWS_WITH_AS(io::read_polytope_file("/nonexistent/x.poly"), doctest::Contains("IOError"), Error);
}

TEST_CASE("parse_polynomial") {
    CHECK(to_string(io::parse_polynomial("x1^2 - 3*x1*x2 + 5", 2)) == "x1^2 - 3*x1*x2 + 5");
    CHECK(io::parse_polynomial("-x2 + x2", 2).is_zero());
    CHECK(io::parse_polynomial("0", 3).is_zero());
    CHECK(io::parse_polynomial("2*x1*x1", 1) == io::parse_polynomial("2*x1^2", 1));
    CHECK_THROWS_AS(io::parse_polynomial("x4", 3), io::ParseError);
    CHECK_THROWS_AS(io::parse_polynomial("x1 +", 3), io::ParseError);
    CHECK_THROWS_AS(io::parse_polynomial("x0", 3), io::ParseError);
}

TEST_CASE("parse_class") {
    const auto ring = ChenRuanRing::from_polytope(load("p2_124.poly"));
    const auto a = io::parse_class("3*x1^2*x2 @ 2 - x3 @ 0 + 2 @ 1", ring);
    CHECK(a == ring.make(2, poly(3, "3*x1^2*x2")) + ring.make(0, poly(3, "-x3")) + ring.identity_of(1) * Integer(2));
    CHECK(io::parse_class("x3 @ 2", ring).is_zero());
    CHECK(io::parse_class("1 @ 0", ring) == ring.unit());
    CHECK(io::parse_class("x1 @ 1 + x1 @ 1", ring) == ring.make(1, poly(3, "2*x1")));
    CHECK_THROWS_AS(io::parse_class("x1 @ 9", ring), io::ParseError);
    CHECK_THROWS_AS(io::parse_class("x1", ring), io::ParseError);
}

TEST_CASE("parse_class reads back rendered terms") {
    std::mt19937_64 rng(53);
    const auto ring = ChenRuanRing::from_polytope(load("square.poly"));
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_class(ring, rng);
        CRClass b = ring.zero();
        for (const auto& [k, p] : a.components)
            for (const auto& [mono, c] : p.terms())
                b = b + io::parse_class(to_string(Polynomial::monomial(mono) * c) + " @ " + std::to_string(k), ring);
        CHECK(b == a);
    }
}

TEST_CASE("pretty and machine output carry the same content") {
    const auto ring = ChenRuanRing::from_polytope(load("p2_124.poly"));
    const auto js = report::sectors_json(ring.sectors());
    const auto pretty = report::sectors_pretty(ring.sectors());
    REQUIRE(js["sectors"].size() == 4);
    for (const auto& row : js["sectors"]) {
        CHECK(pretty.find(row["name"].get<std::string>()) != std::string::npos);
        CHECK(pretty.find(row["degree_shift"].get<std::string>()) != std::string::npos);
        for (const auto& g : row["ideal"]) CHECK(pretty.find(g.get<std::string>()) != std::string::npos);
    }
    const auto tj = report::product_table_json(ring);
    const auto tp = report::product_table_pretty(ring);
    CHECK(tj["entries"].size() == 16);
    for (const auto& e : tj["entries"]) CHECK(tp.find(e["entry"].get<std::string>()) != std::string::npos);
}

TEST_CASE("product_entry rendering") {
    const auto ring = ChenRuanRing::from_polytope(load("p2_124.poly"));
    CHECK(report::product_entry(ring.structure_constant(0, 0)) == "1_g0");
    CHECK(report::product_entry(ring.structure_constant(3, 3)) == "(x1)*(x2)*1_g1");
    CHECK(report::product_entry(ring.structure_constant(2, 2)) == "(1)*(x2)*1_g1");
    CHECK(report::sector_name(3) == "g3");
}
