#include "toric/polynomial.hpp"

#include <numeric>

#include "toric/error.hpp"

namespace toric {

Monomial Monomial::squarefree(std::size_t num_vars, const FacetSet& s) {
    Monomial m(num_vars);
    for (std::size_t i : s) m.exponents_.at(i) = 1;
    return m;
}

unsigned Monomial::degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

FacetSet Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > 0) s.push_back(i);
    return FacetSet(std::move(s));
}

bool Monomial::is_one() const {
    return degree() == 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) throw Error("ShapeMismatch", "monomials in different variable counts");
    Monomial out = a;
    for (std::size_t i = 0; i < b.exponents_.size(); ++i) out.exponents_[i] += b.exponents_[i];
    return out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree();
    unsigned db = b.degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
}

std::string to_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Integer& c) {
    Polynomial p(num_vars);
    p.add_term(Monomial(num_vars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t i) {
    std::vector<unsigned> e(num_vars, 0);
    e.at(i) = 1;
    return monomial(Monomial(std::move(e)));
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
    Polynomial p(m.num_vars());
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
    if (m.num_vars() != num_vars_) throw Error("ShapeMismatch", "monomial has the wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

unsigned Polynomial::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

FacetSet Polynomial::variables() const {
    FacetSet s;
    for (const auto& [m, c] : terms_) s = s | m.support();
    return s;
}

void Polynomial::check_vars(const Polynomial& other) const {
    if (other.num_vars_ != num_vars_) throw Error("ShapeMismatch", "polynomials in different variable counts");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_vars(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_vars(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial out(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
    if (m.num_vars() != a.num_vars_) throw Error("ShapeMismatch", "monomial has the wrong number of variables");
    Polynomial out(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_) out.terms_.emplace(ma * m, ca);
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += to_string(m);
        }
    }
    return out;
}

} // namespace toric
