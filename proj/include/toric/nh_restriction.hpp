#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "toric/chen_ruan.hpp"

namespace toric {

/// Restrictions to the fixed points: for each sector g and each vertex v of
/// its fixed face, a polynomial in the variables of v. Keys are
/// (sector index, vertex index); zero components are not stored.
struct NHClass {
    std::size_t num_vars = 0;
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> components;

    friend bool operator==(const NHClass&, const NHClass&) = default;
};

NHClass operator+(const NHClass& a, const NHClass& b);

/// Restriction of Chen-Ruan classes to the vertex components, and the star
/// product that makes it a ring homomorphism.
class NHRing {
public:
    explicit NHRing(const ChenRuanRing& ring) : ring_(&ring) {}

    const ChenRuanRing& ring() const noexcept { return *ring_; }

    NHClass restrict(const CRClass& a) const;

    /// At each vertex u of the target fixed face: p_u * q_u times the
    /// structure-constant monomial when supp(g) | supp(h) lies in u, else 0.
    /// Throws Error("ShapeMismatch") for inadmissible keys or variables.
    NHClass multiply(const NHClass& a, const NHClass& b) const;

    bool check_homomorphism(const CRClass& a, const CRClass& b) const;

private:
    void check_class(const NHClass& a) const;

    const ChenRuanRing* ring_;
};

struct SectorInjectivity {
    std::size_t sector = 0;
    std::size_t columns = 0;   // monomials of the sector module with degree <= bound
    std::size_t rank = 0;      // rank over Q of the restriction matrix
    bool injective = false;
    /// Nonzero element of the kernel when not injective.
    std::optional<Polynomial> kernel_witness;
    /// Strict mode only: every nonzero elementary divisor of the restriction matrix is 1.
    std::optional<bool> unimodular_over_z;
};

struct InjectivityReport {
    unsigned degree_bound = 0;
    std::vector<SectorInjectivity> sectors;

    bool injective() const;
};

/// Monomials of polynomial degree <= bound surviving in the presentation,
/// in canonical (descending grlex) order.
std::vector<Monomial> module_basis(const SRPresentation& pres, unsigned degree_bound);

InjectivityReport injectivity_rank_check(const ChenRuanRing& ring, unsigned degree_bound, bool strict_z = false);

} // namespace toric
