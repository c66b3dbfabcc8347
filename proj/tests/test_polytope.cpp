#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "toric/error.hpp"
#include "toric/polytope.hpp"

using namespace toric;
using testing::load;

namespace {

LabeledPolytope make(std::size_t dim, std::vector<std::vector<long>> normals, std::vector<long> labels,
                     std::vector<Rational> offsets) {
    LabeledPolytope p;
    p.dim = dim;
    for (const auto& n : normals) p.normals.emplace_back(n.begin(), n.end());
    for (long b : labels) p.labels.emplace_back(b);
    p.offsets = std::move(offsets);
    return p;
}

LabeledPolytope unit_square() {
    return make(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {1, 1, 1, 1}, {0, 1, 0, 1});
}

std::optional<ValidationFailure> failure(const LabeledPolytope& p) {
    auto d = validate(p);
    if (!d) return std::nullopt;
    return d->failure;
}

// Brute-force boundedness: the cone { v : <rho_i, v> >= 0 } is nonzero iff the
// normals have rank < n, or some (n-1)-subset of rank n-1 has a null direction
// d with <rho_i, d> >= 0 for all i (an extreme ray, up to sign).
bool brute_force_bounded(const LabeledPolytope& p) {
    const std::size_t n = p.dim;
    const std::size_t m = p.num_facets();
    IntMatrix all(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < n; ++c) all(i, c) = p.normals[i][c];
    if (rank(all) < n) return false;
    if (n == 1) {
        bool pos = false, neg = false;
        for (const auto& r : p.normals) (r[0] > 0 ? pos : neg) = true;
        return pos && neg;
    }
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
    do {
        IntMatrix sub(n - 1, n);
        std::size_t r = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask[i]) {
                for (std::size_t c = 0; c < n; ++c) sub(r, c) = p.normals[i][c];
                ++r;
            }
        if (rank(sub) != n - 1) continue;
        IntMatrix k = kernel_basis(sub);
        for (int sign : {1, -1}) {
            bool inside = true;
            for (std::size_t i = 0; i < m && inside; ++i) {
                Integer dot = 0;
                for (std::size_t c = 0; c < n; ++c) dot += p.normals[i][c] * k(c, 0);
                inside = sign * dot >= 0;
            }
            if (inside) return false;
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return true;
}

} // namespace

TEST_CASE("validate") {
    CHECK_FALSE(validate(load("p2_112.poly")));
    CHECK_FALSE(validate(load("p2_124.poly")));
    CHECK_FALSE(validate(load("square.poly")));
    CHECK_FALSE(validate(load("cp1.poly")));
    CHECK_FALSE(validate(load("cp3.poly")));

    SUBCASE("slab is unbounded") {
        CHECK(failure(make(2, {{0, 1}, {0, -1}, {1, 0}}, {1, 1, 1}, {0, 2, 0})) ==
              ValidationFailure::UnboundedPolytope);
    }
    SUBCASE("duplicated facet") {
        auto p = unit_square();
        p.normals.push_back(p.normals[0]);
        p.labels.push_back(1);
        p.offsets.push_back(0);
        CHECK(failure(p) == ValidationFailure::RedundantFacet);
        // the duplicate is never the unique inequality tight on a facet
        auto verts = enumerate_vertices(p);
        for (const auto& v : verts) CHECK(v.facets.contains(0) == v.facets.contains(4));
    }
    SUBCASE("strictly redundant inequality") {
        auto p = unit_square();
        p.normals.push_back({Integer(-1), Integer(0)});
        p.labels.push_back(1);
        p.offsets.push_back(5);
        CHECK(failure(p) == ValidationFailure::RedundantFacet);
    }
    SUBCASE("not full-dimensional") {
        CHECK(failure(make(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {1, 1, 1, 1}, {0, 0, 0, 1})) ==
              ValidationFailure::RedundantFacet);
    }
    SUBCASE("empty") {
        CHECK(failure(make(1, {{1}, {-1}}, {1, 1}, {0, -1})) == ValidationFailure::EmptyPolytope);
    }
    SUBCASE("non-primitive normal") {
        CHECK(failure(make(2, {{2, 0}, {0, 1}, {-1, -1}}, {1, 1, 1}, {0, 0, 1})) ==
              ValidationFailure::NonPrimitiveNormal);
    }
    SUBCASE("square pyramid is not simple") {
        CHECK(failure(load("pyramid.poly")) == ValidationFailure::NotSimple);
    }
    SUBCASE("torsion cokernel") {
        CHECK(failure(make(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {2, 2, 2, 2}, {0, 2, 0, 2})) ==
              ValidationFailure::TorsionCokernel);
    }
    SUBCASE("shape errors throw") {
        auto p = unit_square();
        p.labels[1] = 0;
        CHECK_THROWS_AS(validate(p), Error);
        p = unit_square();
        p.normals[2].pop_back();
        CHECK_THROWS_AS(validate(p), Error);
    }
}

TEST_CASE("enumerate_vertices") {
    SUBCASE("P^2_(1,1,2)") {
        auto v = enumerate_vertices(load("p2_112.poly"));
        REQUIRE(v.size() == 3);
        CHECK(v[0] == VertexData{{1, 0}, FacetSet{0, 1}});
        CHECK(v[1] == VertexData{{0, 0}, FacetSet{0, 2}});
        CHECK(v[2] == VertexData{{0, 2}, FacetSet{1, 2}});
    }
    SUBCASE("standard simplex") {
        auto v = enumerate_vertices(load("cp2.poly"));
        REQUIRE(v.size() == 3);
        CHECK(v[0].point == RationalVector{0, 0});
        CHECK(v[1].point == RationalVector{0, 1});
        CHECK(v[2].point == RationalVector{1, 0});
    }
    SUBCASE("P^2_(1,2,4) has the same combinatorics") {
        auto a = enumerate_vertices(load("p2_112.poly"));
        auto b = enumerate_vertices(load("p2_124.poly"));
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].facets == b[k].facets);
    }
    SUBCASE("slack vanishes exactly on the facet set") {
        for (const char* name : {"p2_112.poly", "p2_124.poly", "square.poly", "cp3.poly"}) {
            auto p = load(name);
            for (const auto& v : enumerate_vertices(p)) {
                CHECK(v.facets.size() == p.dim);
                for (std::size_t i = 0; i < p.num_facets(); ++i) {
                    if (v.facets.contains(i)) {
                        CHECK(p.slack(i, v.point) == 0);
                    } else {
                        CHECK(p.slack(i, v.point) > 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("face_complex") {
    SUBCASE("triangle") {
        auto fc = face_complex(load("p2_112.poly"));
        CHECK(fc.minimal_nonfaces == std::vector<FacetSet>{FacetSet{0, 1, 2}});
        REQUIRE(fc.edges.size() == 3);
        // vertices {1,2} (index 0) and {1,3} (index 1) share facet 1
        CHECK(fc.edges[0] == Edge{0, 1, 1, 2});
    }
    SUBCASE("square") {
        auto fc = face_complex(unit_square());
        CHECK(fc.minimal_nonfaces == std::vector<FacetSet>{FacetSet{0, 1}, FacetSet{2, 3}});
        CHECK(fc.edges.size() == 4);
    }
    SUBCASE("segment") {
        auto fc = face_complex(load("cp1.poly"));
        CHECK(fc.minimal_nonfaces == std::vector<FacetSet>{FacetSet{0, 1}});
        REQUIRE(fc.edges.size() == 1);
        CHECK(fc.edges[0] == Edge{0, 1, 0, 1});
    }
    SUBCASE("invalid input throws") {
        CHECK_THROWS_WITH_AS(face_complex(load("pyramid.poly")), doctest::Contains("NotSimple"), Error);
    }
    SUBCASE("faces are exactly the sets avoiding minimal non-faces") {
        for (const char* name : {"p2_112.poly", "square.poly", "cp3.poly", "cp1.poly"}) {
            auto fc = face_complex(load(name));
            const std::size_t m = fc.num_facets;
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                std::vector<std::size_t> items;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (1u << i)) items.push_back(i);
                if (items.size() > fc.dim) continue;
                FacetSet s(items);
                bool avoids = true;
                for (const auto& nf : fc.minimal_nonfaces) avoids = avoids && !nf.is_subset_of(s);
                CHECK(fc.is_face(s) == avoids);
            }
        }
    }
    SUBCASE("edge annotations") {
        for (const char* name : {"p2_124.poly", "square.poly", "cp3.poly"}) {
            auto fc = face_complex(load(name));
            for (const auto& e : fc.edges) {
                const auto& fv = fc.vertices[e.v].facets;
                const auto& fw = fc.vertices[e.w].facets;
                CHECK((fv & fw).size() == fc.dim - 1);
                CHECK(fv - fw == FacetSet{e.j});
                CHECK(fw - fv == FacetSet{e.i});
            }
        }
    }
}

TEST_CASE("weight_matrix") {
    CHECK(weight_matrix(load("p2_112.poly")) == IntMatrix{{0, -2, 1}, {1, -1, 0}});
    CHECK(weight_matrix(load("p2_124.poly")) == IntMatrix{{0, -2, 1}, {2, -1, 0}});
    CHECK(weight_matrix(unit_square()) == IntMatrix{{1, -1, 0, 0}, {0, 0, 1, -1}});
}

TEST_CASE("boundedness agrees with ray enumeration") {
    for (const char* name : {"p2_112.poly", "p2_124.poly", "square.poly", "cp1.poly", "cp2.poly", "cp3.poly"}) {
        auto p = load(name);
        CHECK(is_bounded(p));
        CHECK(brute_force_bounded(p));
    }
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<std::size_t> count(2, 5);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = trial % 2 ? 2 : 3;
        LabeledPolytope p;
        p.dim = n;
        const std::size_t m = count(rng) + n - 2;
        while (p.normals.size() < m) {
            std::vector<Integer> r(n);
            for (auto& x : r) x = entry(rng);
            if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; })) continue;
            p.normals.push_back(r);
            p.labels.emplace_back(1);
            p.offsets.emplace_back(1);
        }
        CHECK(is_bounded(p) == brute_force_bounded(p));
    }
}
