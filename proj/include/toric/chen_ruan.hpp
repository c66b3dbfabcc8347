#pragma once

#include <map>
#include <optional>
#include <vector>

#include "toric/polynomial.hpp"
#include "toric/sectors.hpp"

namespace toric {

/// An element of the equivariant Chen-Ruan ring: one polynomial per sector
/// index, each in normal form for that sector's presentation. Zero
/// components are never stored.
struct CRClass {
    std::size_t num_vars = 0;
    std::map<std::size_t, Polynomial> components;

    bool is_zero() const noexcept { return components.empty(); }

    friend bool operator==(const CRClass&, const CRClass&) = default;
};

CRClass operator+(const CRClass& a, const CRClass& b);
CRClass operator*(const CRClass& a, const Integer& c);

/// 1_g * 1_h = (virtual) * (euler) * 1_gh, or zero when the fixed loci of g
/// and h do not meet.
struct StructureConstant {
    std::size_t g = 0;
    std::size_t h = 0;
    std::optional<std::size_t> target;
    /// x_i over i in supp(g) | supp(h) whose three weights of g, h, (gh)^-1 sum to 2.
    Monomial virtual_class;
    /// x_i over i in (supp(g) | supp(h)) - supp(gh).
    Monomial euler_class;

    bool is_zero() const noexcept { return !target.has_value(); }
    Monomial factor() const { return virtual_class * euler_class; }
};

class ChenRuanRing {
public:
    explicit ChenRuanRing(SectorTable table);

    /// Validates, builds K and enumerates sectors. Throws Error("InvalidPolytope").
    static ChenRuanRing from_polytope(const LabeledPolytope& p);

    const SectorTable& sectors() const noexcept { return table_; }
    const FaceComplex& complex() const noexcept { return table_.complex(); }
    std::size_t num_vars() const noexcept { return table_.complex().num_facets; }

    CRClass zero() const { return CRClass{num_vars(), {}}; }
    /// 1_g for the sector with index k.
    CRClass identity_of(std::size_t k) const;
    CRClass unit() const { return identity_of(0); }
    /// p * 1_g, reduced into the sector's presentation.
    CRClass make(std::size_t k, const Polynomial& p) const;

    const StructureConstant& structure_constant(std::size_t g, std::size_t h) const;
    /// Throws Error("UnlistedSector").
    const StructureConstant& structure_constant(const SectorElement& g, const SectorElement& h) const;

    CRClass multiply(const CRClass& a, const CRClass& b) const;

    /// 2 deg(p) + 2 age(g), common to all components; nullopt if the class is
    /// zero, has a nonhomogeneous component, or mixes degrees.
    std::optional<Rational> rational_degree(const CRClass& a) const;

    /// Row g, column h: the structure constant of 1_g * 1_h.
    std::vector<std::vector<StructureConstant>> multiplication_table() const { return constants_; }

private:
    StructureConstant compute_constant(std::size_t g, std::size_t h) const;
    void check_class(const CRClass& a) const;

    SectorTable table_;
    std::vector<std::vector<StructureConstant>> constants_;
};

} // namespace toric
