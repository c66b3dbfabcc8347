#pragma once

#include <memory>
#include <vector>

#include "toric/polynomial.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Z[x_1..x_m] / < x^s : s disjoint from tau, s | tau not a face of K >.
/// With tau empty this is the Stanley-Reisner ring of the polytope; for a
/// face tau it presents the equivariant cohomology of the preimage of the
/// face cut out by tau, tensored with Z[x_i : i in tau].
class SRPresentation {
public:
    /// Throws Error("NotAFace") unless tau is empty or a face of K.
    SRPresentation(std::shared_ptr<const FaceComplex> complex, FacetSet tau = {});

    const FaceComplex& complex() const noexcept { return *complex_; }
    const std::shared_ptr<const FaceComplex>& complex_ptr() const noexcept { return complex_; }
    const FacetSet& tau() const noexcept { return tau_; }
    std::size_t num_vars() const noexcept { return complex_->num_facets; }

    /// A monomial with this support survives in the quotient.
    bool survives(const FacetSet& support) const;
    /// Minimal generators of the ideal, in increasing size then lexicographic order.
    std::vector<FacetSet> ideal_generators() const;

    friend bool operator==(const SRPresentation& a, const SRPresentation& b) {
        return a.complex_ == b.complex_ && a.tau_ == b.tau_;
    }

private:
    std::shared_ptr<const FaceComplex> complex_;
    FacetSet tau_;
};

/// Normal form: drops every term whose support joined with tau is not a face.
Polynomial reduce(const Polynomial& p, const SRPresentation& pres);

/// Sets x_i = 0 for every i outside the facet set of v.
Polynomial vertex_restrict(const Polynomial& p, const VertexData& v);

/// Sets x_i = 0.
Polynomial substitute_zero(const Polynomial& p, std::size_t i);

/// Piecewise polynomial: one polynomial per vertex, in vertex order.
struct PWTuple {
    std::vector<Polynomial> components;

    friend bool operator==(const PWTuple&, const PWTuple&) = default;
};

PWTuple sr_to_pw(const Polynomial& p, const FaceComplex& fc);

/// Componentwise product.
PWTuple operator*(const PWTuple& a, const PWTuple& b);

/// Edge compatibility: p_v|_{x_j=0} == p_w|_{x_i=0} along every edge.
/// Throws Error("ShapeMismatch") when a component has the wrong arity or uses
/// a variable outside its vertex.
bool gkm_membership(const PWTuple& t, const FaceComplex& fc);

/// Pullback along the inclusion of the smaller face (larger tau) into the
/// larger one: identity on variables, then normal form in `to`.
/// Throws Error("NotAFaceInclusion") unless from.tau() is a subset of to.tau().
Polynomial face_pullback(const Polynomial& p, const SRPresentation& from, const SRPresentation& to);

/// Pushforward from the smaller face to the larger one: multiplication by
/// x^(from.tau - to.tau), then normal form in `to`.
/// Throws Error("NotAFaceInclusion") unless to.tau() is a subset of from.tau().
Polynomial face_pushforward(const Polynomial& p, const SRPresentation& from, const SRPresentation& to);

} // namespace toric
