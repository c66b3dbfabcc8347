#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Exponent vector over variables x_1..x_m.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exponents_(num_vars, 0) {}
    explicit Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

    /// The squarefree monomial x^s.
    static Monomial squarefree(std::size_t num_vars, const FacetSet& s);

    std::size_t num_vars() const noexcept { return exponents_.size(); }
    unsigned operator[](std::size_t i) const { return exponents_[i]; }
    const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

    unsigned degree() const;
    FacetSet support() const;
    bool is_one() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exponents_;
};

/// Graded lexicographic order with x_1 largest; `operator()(a, b)` is true
/// when a comes before b, i.e. a is the larger monomial.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// "1", "x1", "x1^2*x3", ...
std::string to_string(const Monomial& m);

/// Sparse polynomial over the integers in m variables. Terms are kept in
/// descending graded lexicographic order and never carry a zero coefficient.
class Polynomial {
public:
    using Terms = std::map<Monomial, Integer, GrlexDescending>;

    Polynomial() = default;
    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    static Polynomial constant(std::size_t num_vars, const Integer& c);
    static Polynomial variable(std::size_t num_vars, std::size_t i);
    static Polynomial monomial(const Monomial& m, const Integer& c = 1);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * m, dropping the term if the coefficient cancels.
    void add_term(const Monomial& m, const Integer& c);
    Integer coefficient(const Monomial& m) const;

    /// Largest total degree; 0 for the zero polynomial.
    unsigned degree() const;
    bool is_homogeneous() const;
    /// Union of the supports of all terms.
    FacetSet variables() const;

    /// Keeps the terms for which keep(monomial) holds.
    template <typename Pred>
    Polynomial filter(Pred keep) const {
        Polynomial out(num_vars_);
        for (const auto& [m, c] : terms_)
            if (keep(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
        return out;
    }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Integer& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Integer(-1); }
    friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Monomial& m);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void check_vars(const Polynomial& other) const;

    std::size_t num_vars_ = 0;
    Terms terms_;
};

/// Canonical rendering, e.g. "x1^2 - 3*x1*x2 + 5"; "0" for zero.
std::string to_string(const Polynomial& p);

} // namespace toric
