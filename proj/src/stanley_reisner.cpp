#include "toric/stanley_reisner.hpp"

#include <functional>

#include "toric/error.hpp"

namespace toric {

SRPresentation::SRPresentation(std::shared_ptr<const FaceComplex> complex, FacetSet tau)
    : complex_(std::move(complex)), tau_(std::move(tau)) {
    if (!complex_) throw Error("ShapeMismatch", "presentation without a complex");
    if (!tau_.empty() && !complex_->is_face(tau_)) {
        throw Error("NotAFace", "shift set " + to_string(tau_) + " is not a face of K");
    }
}

bool SRPresentation::survives(const FacetSet& support) const {
    return complex_->is_face(support | tau_);
}

std::vector<FacetSet> SRPresentation::ideal_generators() const {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < num_vars(); ++i)
        if (!tau_.contains(i)) free.push_back(i);

    std::vector<FacetSet> gens;
    std::vector<std::size_t> current;
    // Subsets of `free` by increasing size, skipping supersets of generators.
    std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t start, std::size_t size) {
        if (current.size() == size) {
            FacetSet s(current);
            for (const auto& g : gens)
                if (g.is_subset_of(s)) return;
            if (!survives(s)) gens.push_back(std::move(s));
            return;
        }
        for (std::size_t k = start; k < free.size(); ++k) {
            current.push_back(free[k]);
            visit(k + 1, size);
            current.pop_back();
        }
    };
    for (std::size_t size = 1; size <= free.size(); ++size) {
        visit(0, size);
    }
    return gens;
}

Polynomial reduce(const Polynomial& p, const SRPresentation& pres) {
    if (p.num_vars() != pres.num_vars()) throw Error("ShapeMismatch", "polynomial arity differs from presentation");
    return p.filter([&](const Monomial& m) { return pres.survives(m.support()); });
}

Polynomial vertex_restrict(const Polynomial& p, const VertexData& v) {
    return p.filter([&](const Monomial& m) { return m.support().is_subset_of(v.facets); });
}

Polynomial substitute_zero(const Polynomial& p, std::size_t i) {
    return p.filter([&](const Monomial& m) { return m[i] == 0; });
}

PWTuple sr_to_pw(const Polynomial& p, const FaceComplex& fc) {
    PWTuple t;
    t.components.reserve(fc.vertices.size());
    for (const auto& v : fc.vertices) t.components.push_back(vertex_restrict(p, v));
    return t;
}

PWTuple operator*(const PWTuple& a, const PWTuple& b) {
    if (a.components.size() != b.components.size()) throw Error("ShapeMismatch", "tuples of different length");
    PWTuple out;
    for (std::size_t k = 0; k < a.components.size(); ++k) out.components.push_back(a.components[k] * b.components[k]);
    return out;
}

bool gkm_membership(const PWTuple& t, const FaceComplex& fc) {
    if (t.components.size() != fc.vertices.size()) {
        throw Error("ShapeMismatch", "tuple needs one component per vertex");
    }
    for (std::size_t k = 0; k < t.components.size(); ++k) {
        const auto& c = t.components[k];
        if (c.num_vars() != fc.num_facets || !c.variables().is_subset_of(fc.vertices[k].facets)) {
            throw Error("ShapeMismatch", "component at vertex " + to_string(fc.vertices[k].facets) +
                                             " uses a variable outside the vertex");
        }
    }
    for (const auto& e : fc.edges) {
        if (substitute_zero(t.components[e.v], e.j) != substitute_zero(t.components[e.w], e.i)) return false;
    }
    return true;
}

Polynomial face_pullback(const Polynomial& p, const SRPresentation& from, const SRPresentation& to) {
    if (!from.tau().is_subset_of(to.tau())) {
        throw Error("NotAFaceInclusion", "pullback needs " + to_string(from.tau()) + " within " + to_string(to.tau()));
    }
    return reduce(p, to);
}

Polynomial face_pushforward(const Polynomial& p, const SRPresentation& from, const SRPresentation& to) {
    if (!to.tau().is_subset_of(from.tau())) {
        throw Error("NotAFaceInclusion", "pushforward needs " + to_string(to.tau()) + " within " + to_string(from.tau()));
    }
    return reduce(p * Monomial::squarefree(p.num_vars(), from.tau() - to.tau()), to);
}

} // namespace toric
