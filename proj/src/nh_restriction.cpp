#include "toric/nh_restriction.hpp"

#include <algorithm>
#include <functional>

#include "toric/error.hpp"
#include "toric/lattice.hpp"

namespace toric {

NHClass operator+(const NHClass& a, const NHClass& b) {
    if (a.num_vars != b.num_vars) throw Error("ShapeMismatch", "classes in different variable counts");
    NHClass out = a;
    for (const auto& [key, p] : b.components) {
        auto [it, inserted] = out.components.try_emplace(key, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) out.components.erase(it);
        }
    }
    return out;
}

NHClass NHRing::restrict(const CRClass& a) const {
    const auto& table = ring_->sectors();
    const auto& fc = ring_->complex();
    NHClass out{ring_->num_vars(), {}};
    for (const auto& [g, p] : a.components) {
        for (std::size_t v : table.fixed_vertices(g)) {
            Polynomial r = vertex_restrict(p, fc.vertices[v]);
            if (!r.is_zero()) out.components.emplace(std::make_pair(g, v), std::move(r));
        }
    }
    return out;
}

void NHRing::check_class(const NHClass& a) const {
    const auto& table = ring_->sectors();
    const auto& fc = ring_->complex();
    if (a.num_vars != ring_->num_vars()) throw Error("ShapeMismatch", "class has the wrong number of variables");
    for (const auto& [key, p] : a.components) {
        const auto [g, v] = key;
        if (g >= table.size() || v >= fc.vertices.size()) throw Error("ShapeMismatch", "component key out of range");
        const FacetSet& vf = fc.vertices[v].facets;
        if (!table[g].support().is_subset_of(vf)) {
            throw Error("ShapeMismatch", "vertex " + to_string(vf) + " is not on the fixed face of sector " +
                                             std::to_string(g));
        }
        if (!p.variables().is_subset_of(vf)) {
            throw Error("ShapeMismatch", "component at vertex " + to_string(vf) + " uses a foreign variable");
        }
    }
}

NHClass NHRing::multiply(const NHClass& a, const NHClass& b) const {
    check_class(a);
    check_class(b);
    const auto& table = ring_->sectors();
    const auto& fc = ring_->complex();
    NHClass out{ring_->num_vars(), {}};
    for (const auto& [ka, p] : a.components) {
        for (const auto& [kb, q] : b.components) {
            if (ka.second != kb.second) continue;
            const std::size_t u = ka.second;
            const StructureConstant& sc = ring_->structure_constant(ka.first, kb.first);
            if (sc.is_zero()) continue;
            const FacetSet& uf = fc.vertices[u].facets;
            if (!(table[ka.first].support() | table[kb.first].support()).is_subset_of(uf)) continue;
            Polynomial prod = vertex_restrict((p * q) * sc.factor(), fc.vertices[u]);
            if (prod.is_zero()) continue;
            out = out + NHClass{out.num_vars, {{{*sc.target, u}, std::move(prod)}}};
        }
    }
    return out;
}

bool NHRing::check_homomorphism(const CRClass& a, const CRClass& b) const {
    return restrict(ring_->multiply(a, b)) == multiply(restrict(a), restrict(b));
}

bool InjectivityReport::injective() const {
    return std::all_of(sectors.begin(), sectors.end(), [](const SectorInjectivity& s) {
        return s.injective && s.unimodular_over_z.value_or(true);
    });
}

std::vector<Monomial> module_basis(const SRPresentation& pres, unsigned degree_bound) {
    const std::size_t m = pres.num_vars();
    std::vector<Monomial> out;
    std::vector<unsigned> e(m, 0);
    std::function<void(std::size_t, unsigned)> visit = [&](std::size_t i, unsigned remaining) {
        if (i == m) {
            Monomial mono(e);
            if (pres.survives(mono.support())) out.push_back(std::move(mono));
            return;
        }
        for (unsigned k = 0; k <= remaining; ++k) {
            e[i] = k;
            visit(i + 1, remaining - k);
        }
        e[i] = 0;
    };
    visit(0, degree_bound);
    std::sort(out.begin(), out.end(), GrlexDescending{});
    return out;
}

InjectivityReport injectivity_rank_check(const ChenRuanRing& ring, unsigned degree_bound, bool strict_z) {
    const auto& table = ring.sectors();
    const auto& fc = ring.complex();
    InjectivityReport report;
    report.degree_bound = degree_bound;
    for (std::size_t g = 0; g < table.size(); ++g) {
        const auto basis = module_basis(table.module(g), degree_bound);
        const auto& verts = table.fixed_vertices(g);

        // Rows: (vertex of the fixed face, monomial in that vertex's variables).
        std::vector<std::pair<std::size_t, Monomial>> row_keys;
        for (std::size_t v : verts) {
            for (const auto& mono : basis)
                if (mono.support().is_subset_of(fc.vertices[v].facets)) row_keys.emplace_back(v, mono);
        }
        std::sort(row_keys.begin(), row_keys.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return GrlexDescending{}(a.second, b.second);
        });
        row_keys.erase(std::unique(row_keys.begin(), row_keys.end()), row_keys.end());

        IntMatrix mat(row_keys.size(), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const Polynomial col = Polynomial::monomial(basis[c]);
            for (std::size_t v : verts) {
                const Polynomial r = vertex_restrict(col, fc.vertices[v]);
                for (const auto& [mono, coeff] : r.terms()) {
                    auto it = std::lower_bound(row_keys.begin(), row_keys.end(), std::make_pair(v, mono),
                                               [](const auto& a, const auto& b) {
                                                   if (a.first != b.first) return a.first < b.first;
                                                   return GrlexDescending{}(a.second, b.second);
                                               });
                    mat(static_cast<std::size_t>(it - row_keys.begin()), c) += coeff;
                }
            }
        }

        SectorInjectivity s;
        s.sector = g;
        s.columns = basis.size();
        s.rank = rank(mat);
        s.injective = s.rank == s.columns;
        if (!s.injective) {
            IntMatrix kernel = kernel_basis(mat);
            Polynomial witness(ring.num_vars());
            for (std::size_t c = 0; c < basis.size(); ++c) witness.add_term(basis[c], kernel(c, 0));
            s.kernel_witness = std::move(witness);
        }
        if (strict_z) {
            const auto divisors = snf(mat).diagonal();
            s.unimodular_over_z = std::all_of(divisors.begin(), divisors.end(),
                                              [](const Integer& d) { return d == 0 || d == 1; });
        }
        report.sectors.push_back(std::move(s));
    }
    return report;
}

} // namespace toric
