#include "toric/chen_ruan.hpp"

#include "toric/error.hpp"

namespace toric {

CRClass operator+(const CRClass& a, const CRClass& b) {
    if (a.num_vars != b.num_vars) throw Error("ShapeMismatch", "classes in different variable counts");
    CRClass out = a;
    for (const auto& [k, p] : b.components) {
        auto [it, inserted] = out.components.try_emplace(k, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) out.components.erase(it);
        }
    }
    return out;
}

CRClass operator*(const CRClass& a, const Integer& c) {
    CRClass out{a.num_vars, {}};
    if (c == 0) return out;
    for (const auto& [k, p] : a.components) out.components.emplace(k, p * c);
    return out;
}

ChenRuanRing::ChenRuanRing(SectorTable table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    constants_.resize(n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) constants_[g].push_back(compute_constant(g, h));
}

ChenRuanRing ChenRuanRing::from_polytope(const LabeledPolytope& p) {
    auto fc = std::make_shared<const FaceComplex>(face_complex(p));
    return ChenRuanRing(enumerate_sectors(p, fc));
}

CRClass ChenRuanRing::identity_of(std::size_t k) const {
    return make(k, Polynomial::constant(num_vars(), 1));
}

CRClass ChenRuanRing::make(std::size_t k, const Polynomial& p) const {
    if (k >= table_.size()) throw Error("UnlistedSector", "sector index " + std::to_string(k) + " out of range");
    CRClass out = zero();
    Polynomial r = reduce(p, table_.module(k));
    if (!r.is_zero()) out.components.emplace(k, std::move(r));
    return out;
}

StructureConstant ChenRuanRing::compute_constant(std::size_t g, std::size_t h) const {
    const SectorElement& eg = table_[g];
    const SectorElement& eh = table_[h];
    StructureConstant sc;
    sc.g = g;
    sc.h = h;
    sc.virtual_class = Monomial(num_vars());
    sc.euler_class = Monomial(num_vars());

    const FacetSet joint = eg.support() | eh.support();
    if (!complex().is_face(joint)) return sc;

    SectorElement gh = compose(eg, eh);
    sc.target = table_.require_index(gh);
    const SectorElement ghinv = inverse(gh);
    const FacetSet target_support = gh.support();
    const FacetSet normal = joint - target_support;

    std::vector<unsigned> v(num_vars(), 0);
    std::vector<unsigned> e(num_vars(), 0);
    for (std::size_t i : joint) {
        if (eg.coords[i] + eh.coords[i] + ghinv.coords[i] == 2) v[i] = 1;
    }
    for (std::size_t i : normal) e[i] = 1;
    sc.virtual_class = Monomial(std::move(v));
    sc.euler_class = Monomial(std::move(e));
    return sc;
}

const StructureConstant& ChenRuanRing::structure_constant(std::size_t g, std::size_t h) const {
    if (g >= table_.size() || h >= table_.size()) throw Error("UnlistedSector", "sector index out of range");
    return constants_[g][h];
}

const StructureConstant& ChenRuanRing::structure_constant(const SectorElement& g, const SectorElement& h) const {
    return constants_[table_.require_index(g)][table_.require_index(h)];
}

void ChenRuanRing::check_class(const CRClass& a) const {
    if (a.num_vars != num_vars()) throw Error("ShapeMismatch", "class has the wrong number of variables");
    for (const auto& [k, p] : a.components) {
        if (k >= table_.size()) throw Error("UnlistedSector", "class component at unknown sector index");
    }
}

CRClass ChenRuanRing::multiply(const CRClass& a, const CRClass& b) const {
    check_class(a);
    check_class(b);
    CRClass out = zero();
    for (const auto& [g, p] : a.components) {
        for (const auto& [h, q] : b.components) {
            const StructureConstant& sc = constants_[g][h];
            if (sc.is_zero()) continue;
            Polynomial prod = reduce((p * q) * sc.factor(), table_.module(*sc.target));
            if (prod.is_zero()) continue;
            out = out + CRClass{num_vars(), {{*sc.target, std::move(prod)}}};
        }
    }
    return out;
}

std::optional<Rational> ChenRuanRing::rational_degree(const CRClass& a) const {
    check_class(a);
    std::optional<Rational> degree;
    for (const auto& [k, p] : a.components) {
        if (!p.is_homogeneous()) return std::nullopt;
        Rational d = Rational(2 * p.degree()) + 2 * age(table_[k]);
        if (degree && *degree != d) return std::nullopt;
        degree = d;
    }
    return degree;
}

} // namespace toric
