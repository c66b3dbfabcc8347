#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "toric/error.hpp"
#include "toric/linprog.hpp"

namespace toric {

namespace {

// Calls f on every k-subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Solves the square system rows * x = rhs; nullopt if singular.
std::optional<RationalVector> solve_square(std::vector<RationalVector> rows, RationalVector rhs) {
    const std::size_t n = rows.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && rows[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(rows[piv], rows[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[col][col];
            for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / rows[i][i];
    return x;
}

std::size_t rational_rank(std::vector<RationalVector> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Dimension of the affine hull of the given points (-1 for none).
long affine_dimension(const std::vector<const RationalVector*>& pts) {
    if (pts.empty()) return -1;
    std::vector<RationalVector> diffs;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        RationalVector d(pts[k]->size());
        for (std::size_t c = 0; c < d.size(); ++c) d[c] = (*pts[k])[c] - (*pts[0])[c];
        diffs.push_back(std::move(d));
    }
    return static_cast<long>(rational_rank(std::move(diffs)));
}

void check_shape(const LabeledPolytope& p) {
    if (p.dim == 0) throw Error("ShapeMismatch", "dimension must be positive");
    if (p.labels.size() != p.num_facets() || p.offsets.size() != p.num_facets()) {
        throw Error("ShapeMismatch", "normals, labels and offsets must have one entry per facet");
    }
    for (std::size_t i = 0; i < p.num_facets(); ++i) {
        if (p.normals[i].size() != p.dim) {
            throw Error("ShapeMismatch", "normal of facet " + std::to_string(i + 1) + " has wrong length");
        }
        if (p.labels[i] <= 0) {
            throw Error("ShapeMismatch", "label of facet " + std::to_string(i + 1) + " must be positive");
        }
    }
}

} // namespace

FacetSet::FacetSet(std::initializer_list<std::size_t> items) : FacetSet(std::vector<std::size_t>(items)) {}

FacetSet::FacetSet(std::vector<std::size_t> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool FacetSet::contains(std::size_t i) const {
    return std::binary_search(items_.begin(), items_.end(), i);
}

bool FacetSet::is_subset_of(const FacetSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

FacetSet operator|(const FacetSet& a, const FacetSet& b) {
    FacetSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
}

FacetSet operator&(const FacetSet& a, const FacetSet& b) {
    FacetSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
}

FacetSet operator-(const FacetSet& a, const FacetSet& b) {
    FacetSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
}

std::string to_string(const FacetSet& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(s.items()[k] + 1);
    }
    return out + "}";
}

Rational LabeledPolytope::slack(std::size_t facet, const RationalVector& point) const {
    Rational s = offsets[facet];
    for (std::size_t c = 0; c < dim; ++c) s += Rational(labels[facet] * normals[facet][c]) * point[c];
    return s;
}

bool FaceComplex::is_face(const FacetSet& s) const {
    return std::any_of(vertices.begin(), vertices.end(), [&](const VertexData& v) { return s.is_subset_of(v.facets); });
}

std::vector<std::size_t> FaceComplex::vertices_containing(const FacetSet& s) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (s.is_subset_of(vertices[k].facets)) out.push_back(k);
    }
    return out;
}

std::string_view to_string(ValidationFailure f) {
    switch (f) {
    case ValidationFailure::NonPrimitiveNormal: return "NonPrimitiveNormal";
    case ValidationFailure::UnboundedPolytope: return "UnboundedPolytope";
    case ValidationFailure::EmptyPolytope: return "EmptyPolytope";
    case ValidationFailure::RedundantFacet: return "RedundantFacet";
    case ValidationFailure::NotSimple: return "NotSimple";
    case ValidationFailure::TorsionCokernel: return "TorsionCokernel";
    }
    return "Unknown";
}

bool is_bounded(const LabeledPolytope& p) {
    const std::size_t n = p.dim;
    const std::size_t m = p.num_facets();
    IntMatrix normals(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < n; ++c) normals(i, c) = p.normals[i][c];
    if (rank(normals) < n) return false; // lineality space

    // With spanning normals, unbounded iff some v has <rho_i, v> >= 0 for all
    // i and sum_i <rho_i, v> >= 1. Variables: v+ (n), v- (n), slacks s (m), t (1).
    const std::size_t vars = 2 * n + m + 1;
    std::vector<RationalVector> rows;
    RationalVector rhs;
    RationalVector total(vars, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        RationalVector row(vars, Rational(0));
        for (std::size_t c = 0; c < n; ++c) {
            row[c] = Rational(p.normals[i][c]);
            row[n + c] = -Rational(p.normals[i][c]);
            total[c] += row[c];
            total[n + c] += row[n + c];
        }
        row[2 * n + i] = -1;
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
    }
    total[vars - 1] = -1;
    rows.push_back(std::move(total));
    rhs.emplace_back(1);
    return lp::minimize(rows, rhs, RationalVector(vars, Rational(0))).status == lp::Status::Infeasible;
}

std::vector<VertexData> enumerate_vertices(const LabeledPolytope& p) {
    check_shape(p);
    std::vector<VertexData> out;
    for_each_subset(p.num_facets(), p.dim, [&](const std::vector<std::size_t>& subset) {
        std::vector<RationalVector> rows;
        RationalVector rhs;
        for (std::size_t i : subset) {
            RationalVector row(p.dim);
            for (std::size_t c = 0; c < p.dim; ++c) row[c] = Rational(p.labels[i] * p.normals[i][c]);
            rows.push_back(std::move(row));
            rhs.push_back(-p.offsets[i]);
        }
        auto point = solve_square(std::move(rows), std::move(rhs));
        if (!point) return;
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < p.num_facets(); ++i) {
            Rational s = p.slack(i, *point);
            if (s < 0) return;
            if (s == 0) tight.push_back(i);
        }
        VertexData v{std::move(*point), FacetSet(std::move(tight))};
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    });
    std::sort(out.begin(), out.end(), [](const VertexData& a, const VertexData& b) { return a.facets < b.facets; });
    return out;
}

std::optional<Diagnostic> validate(const LabeledPolytope& p) {
    check_shape(p);
    const std::size_t m = p.num_facets();

    for (std::size_t i = 0; i < m; ++i) {
        Integer g = 0;
        for (const auto& x : p.normals[i]) g = gcd(g, x);
        if (g != 1) {
            return Diagnostic{ValidationFailure::NonPrimitiveNormal,
                              "normal of facet " + std::to_string(i + 1) + " is not primitive"};
        }
    }

    if (!is_bounded(p)) {
        return Diagnostic{ValidationFailure::UnboundedPolytope, "the recession cone contains a nonzero ray"};
    }

    auto vertices = enumerate_vertices(p);
    if (vertices.empty()) {
        return Diagnostic{ValidationFailure::EmptyPolytope, "the inequalities have no common solution"};
    }

    std::vector<const RationalVector*> all;
    for (const auto& v : vertices) all.push_back(&v.point);
    if (affine_dimension(all) != static_cast<long>(p.dim)) {
        return Diagnostic{ValidationFailure::RedundantFacet, "the polytope is not full-dimensional"};
    }

    std::vector<std::vector<std::size_t>> tight_sets(m);
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        for (std::size_t i : vertices[k].facets) tight_sets[i].push_back(k);
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<const RationalVector*> pts;
        for (std::size_t k : tight_sets[i]) pts.push_back(&vertices[k].point);
        if (affine_dimension(pts) != static_cast<long>(p.dim) - 1) {
            return Diagnostic{ValidationFailure::RedundantFacet,
                              "inequality " + std::to_string(i + 1) + " does not cut out a facet"};
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (tight_sets[k] == tight_sets[i]) {
                return Diagnostic{ValidationFailure::RedundantFacet,
                                  "inequality " + std::to_string(i + 1) + " defines the same facet as inequality " +
                                      std::to_string(k + 1)};
            }
        }
    }

    for (const auto& v : vertices) {
        if (v.facets.size() != p.dim) {
            return Diagnostic{ValidationFailure::NotSimple,
                              "vertex with facets " + to_string(v.facets) + " lies on " +
                                  std::to_string(v.facets.size()) + " facets"};
        }
    }

    if (!is_free_cokernel(weight_matrix(p).transpose())) {
        return Diagnostic{ValidationFailure::TorsionCokernel, "the transpose of the weight matrix has torsion cokernel"};
    }
    return std::nullopt;
}

FaceComplex face_complex(const LabeledPolytope& p) {
    if (auto diag = validate(p)) {
        throw Error("InvalidPolytope", std::string(to_string(diag->failure)) + ": " + diag->detail);
    }
    FaceComplex fc;
    fc.dim = p.dim;
    fc.num_facets = p.num_facets();
    fc.vertices = enumerate_vertices(p);

    const std::size_t max_size = std::min(p.dim + 1, fc.num_facets);
    for (std::size_t k = 1; k <= max_size; ++k) {
        std::vector<FacetSet> found;
        for_each_subset(fc.num_facets, k, [&](const std::vector<std::size_t>& subset) {
            FacetSet s(subset);
            for (const auto& nf : fc.minimal_nonfaces) {
                if (nf.is_subset_of(s)) return;
            }
            if (!fc.is_face(s)) found.push_back(std::move(s));
        });
        fc.minimal_nonfaces.insert(fc.minimal_nonfaces.end(), found.begin(), found.end());
    }

    for (std::size_t a = 0; a < fc.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < fc.vertices.size(); ++b) {
            const auto& fa = fc.vertices[a].facets;
            const auto& fb = fc.vertices[b].facets;
            if ((fa & fb).size() + 1 != p.dim) continue;
            fc.edges.push_back(Edge{a, b, *(fa - fb).begin(), *(fb - fa).begin()});
        }
    }
    return fc;
}

IntMatrix weight_matrix(const LabeledPolytope& p) {
    IntMatrix b(p.dim, p.num_facets());
    for (std::size_t i = 0; i < p.num_facets(); ++i)
        for (std::size_t c = 0; c < p.dim; ++c) b(c, i) = p.labels[i] * p.normals[i][c];
    return b;
}

} // namespace toric
