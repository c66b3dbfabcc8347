#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// A sorted, duplicate-free set of 0-based facet indices.
class FacetSet {
public:
    FacetSet() = default;
    FacetSet(std::initializer_list<std::size_t> items);
    explicit FacetSet(std::vector<std::size_t> items);

    const std::vector<std::size_t>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    bool contains(std::size_t i) const;
    bool is_subset_of(const FacetSet& other) const;

    friend FacetSet operator|(const FacetSet& a, const FacetSet& b);
    friend FacetSet operator&(const FacetSet& a, const FacetSet& b);
    friend FacetSet operator-(const FacetSet& a, const FacetSet& b);
    friend auto operator<=>(const FacetSet&, const FacetSet&) = default;

private:
    std::vector<std::size_t> items_;
};

/// Renders with 1-based indices, e.g. "{1,3}".
std::string to_string(const FacetSet& s);

/// Facets i = 0..m-1 with primitive inward normal rho_i, positive label b_i
/// and offset eta_i; the polytope is { v : <b_i rho_i, v> + eta_i >= 0 }.
struct LabeledPolytope {
    std::size_t dim = 0;
    std::vector<std::vector<Integer>> normals;
    std::vector<Integer> labels;
    std::vector<Rational> offsets;

    std::size_t num_facets() const noexcept { return normals.size(); }
    /// <b_i rho_i, point> + eta_i
    Rational slack(std::size_t facet, const RationalVector& point) const;
};

struct VertexData {
    RationalVector point;
    FacetSet facets; // H*_v

    friend bool operator==(const VertexData&, const VertexData&) = default;
};

/// Two vertices sharing dim-1 facets. `j` lies in facets(v) only, `i` in
/// facets(w) only.
struct Edge {
    std::size_t v = 0;
    std::size_t w = 0;
    std::size_t j = 0;
    std::size_t i = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// The simplicial complex K of a simple polytope on its facet indices: a set
/// of facets is a face iff it lies in the facet set of some vertex.
struct FaceComplex {
    std::size_t dim = 0;
    std::size_t num_facets = 0;
    std::vector<VertexData> vertices;
    std::vector<FacetSet> minimal_nonfaces;
    std::vector<Edge> edges;

    bool is_face(const FacetSet& s) const;
    /// Vertices whose facet set contains s (the vertices of the face cut out by s).
    std::vector<std::size_t> vertices_containing(const FacetSet& s) const;
};

enum class ValidationFailure {
    NonPrimitiveNormal,
    UnboundedPolytope,
    EmptyPolytope,
    RedundantFacet,
    NotSimple,
    TorsionCokernel,
};

std::string_view to_string(ValidationFailure f);

struct Diagnostic {
    ValidationFailure failure;
    std::string detail;
};

/// Returns the first violated condition, or nullopt when the polytope is a
/// valid labeled simple polytope with free cokernel. Checks run in the order
/// of the enum above. Shape errors (wrong vector lengths, nonpositive labels)
/// throw Error("ShapeMismatch").
std::optional<Diagnostic> validate(const LabeledPolytope& p);

/// Exact LP decision: the recession cone { v : <rho_i, v> >= 0 } is {0}.
bool is_bounded(const LabeledPolytope& p);

/// Brute force over all dim-subsets of facets; sorted by facet set.
std::vector<VertexData> enumerate_vertices(const LabeledPolytope& p);

/// Builds K from the vertices. Throws Error("InvalidPolytope") if p does not
/// validate.
FaceComplex face_complex(const LabeledPolytope& p);

/// The dim x m matrix B with columns b_i rho_i.
IntMatrix weight_matrix(const LabeledPolytope& p);

} // namespace toric
