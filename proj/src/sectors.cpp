#include "toric/sectors.hpp"

#include <algorithm>

#include "toric/error.hpp"
#include "toric/lattice.hpp"

namespace toric {

FacetSet SectorElement::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) s.push_back(i);
    return FacetSet(std::move(s));
}

bool SectorElement::is_identity() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
}

Rational age(const SectorElement& g) {
    Rational sum = 0;
    for (const auto& q : g.coords) sum += q;
    return sum;
}

SectorElement compose(const SectorElement& g, const SectorElement& h) {
    if (g.coords.size() != h.coords.size()) throw Error("ShapeMismatch", "sectors of different length");
    SectorElement out{RationalVector(g.coords.size())};
    for (std::size_t i = 0; i < g.coords.size(); ++i) out.coords[i] = frac(g.coords[i] + h.coords[i]);
    return out;
}

SectorElement inverse(const SectorElement& g) {
    SectorElement out{RationalVector(g.coords.size())};
    for (std::size_t i = 0; i < g.coords.size(); ++i) out.coords[i] = frac(-g.coords[i]);
    return out;
}

std::string root_of_unity_string(const SectorElement& g) {
    std::string out = "(";
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
        if (i) out += ",";
        const Rational& q = g.coords[i];
        if (q == 0) {
            out += "1";
        } else if (q == Rational(1, 2)) {
            out += "-1";
        } else {
            out += "e(" + to_string(q) + ")";
        }
    }
    return out + ")";
}

SectorTable::SectorTable(std::shared_ptr<const FaceComplex> complex, std::vector<SectorElement> sectors)
    : complex_(std::move(complex)), sectors_(std::move(sectors)) {
    std::sort(sectors_.begin(), sectors_.end(), [](const SectorElement& a, const SectorElement& b) {
        Rational aa = age(a);
        Rational ab = age(b);
        if (aa != ab) return aa < ab;
        return a.coords < b.coords;
    });
    sectors_.erase(std::unique(sectors_.begin(), sectors_.end()), sectors_.end());
    if (sectors_.empty() || !sectors_.front().is_identity()) {
        throw Error("ShapeMismatch", "a sector table must contain the untwisted sector");
    }
    for (const auto& g : sectors_) {
        if (g.coords.size() != complex_->num_facets) throw Error("ShapeMismatch", "sector length differs from m");
        modules_.emplace_back(complex_, g.support());
        fixed_vertices_.push_back(complex_->vertices_containing(g.support()));
    }
}

std::optional<std::size_t> SectorTable::index_of(const SectorElement& g) const {
    auto it = std::find(sectors_.begin(), sectors_.end(), g);
    if (it == sectors_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - sectors_.begin());
}

std::size_t SectorTable::require_index(const SectorElement& g) const {
    if (auto k = index_of(g)) return *k;
    std::string coords;
    for (const auto& q : g.coords) coords += (coords.empty() ? "" : ",") + to_string(q);
    throw Error("UnlistedSector", "(" + coords + ") is not a sector with nonempty fixed locus");
}

SectorTable enumerate_sectors(const LabeledPolytope& p, std::shared_ptr<const FaceComplex> fc) {
    const std::size_t m = p.num_facets();
    std::vector<SectorElement> found;
    for (const auto& v : fc->vertices) {
        std::vector<std::vector<Integer>> cols;
        for (std::size_t i : v.facets) {
            std::vector<Integer> col(p.dim);
            for (std::size_t c = 0; c < p.dim; ++c) col[c] = p.labels[i] * p.normals[i][c];
            cols.push_back(std::move(col));
        }
        for (const auto& local : solve_congruence_group(IntMatrix::from_columns(p.dim, cols))) {
            SectorElement g{RationalVector(m, Rational(0))};
            std::size_t k = 0;
            for (std::size_t i : v.facets) g.coords[i] = local[k++];
            found.push_back(std::move(g));
        }
    }
    return SectorTable(std::move(fc), std::move(found));
}

SRPresentation sector_module(const SectorTable& table, const SectorElement& g) {
    return table.module(table.require_index(g));
}

} // namespace toric
