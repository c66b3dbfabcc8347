#include "toric/properties.hpp"

#include <sstream>

namespace toric {

Polynomial random_polynomial(std::size_t num_vars, std::mt19937_64& rng, unsigned max_degree, int coeff_bound,
                             bool homogeneous, std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> terms_dist(1, max_terms);
    std::uniform_int_distribution<unsigned> degree_dist(0, max_degree);
    std::uniform_int_distribution<std::size_t> var_dist(0, num_vars - 1);
    std::uniform_int_distribution<int> coeff_dist(-coeff_bound, coeff_bound);

    Polynomial p(num_vars);
    const unsigned fixed_degree = degree_dist(rng);
    const std::size_t terms = terms_dist(rng);
    for (std::size_t t = 0; t < terms; ++t) {
        const unsigned d = homogeneous ? fixed_degree : degree_dist(rng);
        std::vector<unsigned> e(num_vars, 0);
        for (unsigned k = 0; k < d; ++k) ++e[var_dist(rng)];
        p.add_term(Monomial(std::move(e)), Integer(coeff_dist(rng)));
    }
    return p;
}

CRClass random_class(const ChenRuanRing& ring, std::mt19937_64& rng, unsigned max_degree, int coeff_bound) {
    std::uniform_int_distribution<std::size_t> sector_dist(0, ring.sectors().size() - 1);
    std::bernoulli_distribution homogeneous(0.5);
    if (homogeneous(rng)) {
        return ring.make(sector_dist(rng), random_polynomial(ring.num_vars(), rng, max_degree, coeff_bound, true));
    }
    std::uniform_int_distribution<std::size_t> count_dist(1, 3);
    CRClass out = ring.zero();
    const std::size_t count = count_dist(rng);
    for (std::size_t k = 0; k < count; ++k) {
        out = out + ring.make(sector_dist(rng), random_polynomial(ring.num_vars(), rng, max_degree, coeff_bound));
    }
    return out;
}

std::vector<PropertyResult> run_property_suite(const ChenRuanRing& ring, const PropertyOptions& options) {
    const NHRing nh(ring);
    const std::size_t n = ring.sectors().size();
    std::mt19937_64 rng(options.seed);

    std::vector<CRClass> a, b, c;
    for (std::size_t k = 0; k < options.samples; ++k) {
        a.push_back(random_class(ring, rng, options.max_degree, options.coeff_bound));
        b.push_back(random_class(ring, rng, options.max_degree, options.coeff_bound));
        c.push_back(random_class(ring, rng, options.max_degree, options.coeff_bound));
    }

    auto count_failures = [&](auto&& pred) {
        std::size_t failures = 0;
        for (std::size_t k = 0; k < options.samples; ++k)
            if (!pred(a[k], b[k], c[k])) ++failures;
        return failures;
    };
    auto summarize = [](std::string name, std::size_t failures, std::size_t total) {
        std::ostringstream d;
        d << (total - failures) << "/" << total << " cases";
        return PropertyResult{std::move(name), failures == 0, d.str()};
    };

    std::vector<PropertyResult> out;

    // Exhaustive over sector identities, then random triples.
    std::size_t failures = 0;
    std::size_t total = 0;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k) {
                const auto x = ring.identity_of(g), y = ring.identity_of(h), z = ring.identity_of(k);
                ++total;
                if (ring.multiply(ring.multiply(x, y), z) != ring.multiply(x, ring.multiply(y, z))) ++failures;
            }
    failures += count_failures([&](const CRClass& x, const CRClass& y, const CRClass& z) {
        return ring.multiply(ring.multiply(x, y), z) == ring.multiply(x, ring.multiply(y, z));
    });
    out.push_back(summarize("associativity", failures, total + options.samples));

    failures = count_failures([&](const CRClass& x, const CRClass& y, const CRClass&) {
        return ring.multiply(x, y) == ring.multiply(y, x);
    });
    out.push_back(summarize("commutativity", failures, options.samples));

    const CRClass one = ring.unit();
    failures = count_failures([&](const CRClass& x, const CRClass&, const CRClass&) {
        return ring.multiply(one, x) == x && ring.multiply(x, one) == x;
    });
    out.push_back(summarize("unit", failures, options.samples));

    failures = count_failures([&](const CRClass& x, const CRClass& y, const CRClass& z) {
        return ring.multiply(x, y + z) == ring.multiply(x, y) + ring.multiply(x, z);
    });
    out.push_back(summarize("distributivity", failures, options.samples));

    failures = 0;
    total = 0;
    for (std::size_t k = 0; k < options.samples; ++k) {
        const auto dx = ring.rational_degree(a[k]);
        const auto dy = ring.rational_degree(b[k]);
        if (!dx || !dy) continue;
        const CRClass prod = ring.multiply(a[k], b[k]);
        if (prod.is_zero()) continue;
        ++total;
        const auto dp = ring.rational_degree(prod);
        if (!dp || *dp != *dx + *dy) ++failures;
    }
    out.push_back(summarize("grading", failures, total));

    failures = 0;
    total = 0;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            ++total;
            if (!nh.check_homomorphism(ring.identity_of(g), ring.identity_of(h))) ++failures;
        }
    failures += count_failures([&](const CRClass& x, const CRClass& y, const CRClass&) {
        return nh.check_homomorphism(x, y);
    });
    out.push_back(summarize("restriction-homomorphism", failures, total + options.samples));

    failures = count_failures([&](const CRClass& x, const CRClass& y, const CRClass& z) {
        const NHClass rx = nh.restrict(x), ry = nh.restrict(y), rz = nh.restrict(z);
        return nh.multiply(nh.multiply(rx, ry), rz) == nh.multiply(rx, nh.multiply(ry, rz));
    });
    out.push_back(summarize("star-associativity", failures, options.samples));

    failures = 0;
    const auto basis = module_basis(ring.sectors().module(0), options.degree_bound);
    for (const auto& mono : basis) {
        if (!gkm_membership(sr_to_pw(Polynomial::monomial(mono), ring.complex()), ring.complex())) ++failures;
    }
    out.push_back(summarize("gkm-membership", failures, basis.size()));

    const InjectivityReport report = injectivity_rank_check(ring, options.degree_bound, options.strict_z);
    std::ostringstream detail;
    detail << "degree <= " << options.degree_bound;
    for (const auto& s : report.sectors) {
        detail << "; sector " << s.sector << " rank " << s.rank << "/" << s.columns;
        if (s.kernel_witness) detail << " kernel " << to_string(*s.kernel_witness);
        if (s.unimodular_over_z) detail << (*s.unimodular_over_z ? " Z-unimodular" : " Z-torsion");
    }
    out.push_back({"injectivity", report.injective(), detail.str()});
    return out;
}

} // namespace toric
