#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "toric/chen_ruan.hpp"
#include "toric/nh_restriction.hpp"

namespace toric {

/// Random polynomial with up to `max_terms` terms of degree <= max_degree
/// and coefficients in [-coeff_bound, coeff_bound]; when `homogeneous` all
/// terms share one randomly chosen degree.
Polynomial random_polynomial(std::size_t num_vars, std::mt19937_64& rng, unsigned max_degree, int coeff_bound,
                             bool homogeneous = false, std::size_t max_terms = 4);

/// Random Chen-Ruan class. Half of the draws are homogeneous single-sector
/// classes, the rest spread random polynomials over one to three sectors.
CRClass random_class(const ChenRuanRing& ring, std::mt19937_64& rng, unsigned max_degree = 3, int coeff_bound = 9);

struct PropertyOptions {
    unsigned degree_bound = 3;  // injectivity rank check
    bool strict_z = false;
    std::size_t samples = 100;  // random triples
    std::uint64_t seed = 20120401;
    unsigned max_degree = 3;
    int coeff_bound = 9;
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Ring axioms, grading, restriction homomorphism, star associativity,
/// piecewise-polynomial membership and injectivity, each as one result.
std::vector<PropertyResult> run_property_suite(const ChenRuanRing& ring, const PropertyOptions& options);

} // namespace toric
