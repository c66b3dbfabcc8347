#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/polytope.hpp"
#include "toric/stanley_reisner.hpp"

namespace toric {

/// An element g of the reduced torus, written through its fractional weights
/// coords[i] in [0,1), i.e. lambda_i(g) = exp(2 pi i coords[i]).
struct SectorElement {
    RationalVector coords;

    /// Indices with nonzero weight; the fixed face is the intersection of these facets.
    FacetSet support() const;
    bool is_identity() const;

    friend auto operator<=>(const SectorElement&, const SectorElement&) = default;
};

/// Sum of the fractional weights; the sector's degree shift is twice this.
Rational age(const SectorElement& g);

/// Group law: componentwise sum mod 1. The result may have an empty fixed
/// locus; callers check the support against K before using it as a sector.
SectorElement compose(const SectorElement& g, const SectorElement& h);

SectorElement inverse(const SectorElement& g);

/// Root-of-unity rendering: "1" for weight 0, "-1" for 1/2, "e(p/q)" for
/// exp(2 pi i p/q) otherwise; e.g. "(-1,-1,1)".
std::string root_of_unity_string(const SectorElement& g);

/// Twisted sectors with nonempty fixed locus, in canonical order: by age,
/// then lexicographically by coordinates. Index 0 is always the untwisted
/// sector.
class SectorTable {
public:
    SectorTable(std::shared_ptr<const FaceComplex> complex, std::vector<SectorElement> sectors);

    std::size_t size() const noexcept { return sectors_.size(); }
    const std::vector<SectorElement>& sectors() const noexcept { return sectors_; }
    const SectorElement& operator[](std::size_t k) const { return sectors_.at(k); }
    const FaceComplex& complex() const noexcept { return *complex_; }
    const std::shared_ptr<const FaceComplex>& complex_ptr() const noexcept { return complex_; }

    std::optional<std::size_t> index_of(const SectorElement& g) const;
    /// Throws Error("UnlistedSector").
    std::size_t require_index(const SectorElement& g) const;

    /// Presentation with tau equal to the sector's support.
    const SRPresentation& module(std::size_t k) const { return modules_.at(k); }
    /// Vertices of the fixed face.
    const std::vector<std::size_t>& fixed_vertices(std::size_t k) const { return fixed_vertices_.at(k); }

private:
    std::shared_ptr<const FaceComplex> complex_;
    std::vector<SectorElement> sectors_;
    std::vector<SRPresentation> modules_;
    std::vector<std::vector<std::size_t>> fixed_vertices_;
};

/// Collects the local group of every vertex (solutions of B_v a in Z^n),
/// pads to m coordinates and deduplicates.
SectorTable enumerate_sectors(const LabeledPolytope& p, std::shared_ptr<const FaceComplex> fc);

/// Throws Error("UnlistedSector") if g is not in the table.
SRPresentation sector_module(const SectorTable& table, const SectorElement& g);

} // namespace toric
