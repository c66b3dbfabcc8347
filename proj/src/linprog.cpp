#include "toric/linprog.hpp"

#include <optional>

#include "toric/error.hpp"

namespace toric::lp {

namespace {

struct Tableau {
    std::vector<RationalVector> rows; // each row: coefficients then rhs
    std::vector<std::size_t> basis;
    std::size_t num_cols = 0;         // variable columns, excluding rhs

    Rational& rhs(std::size_t r) { return rows[r][num_cols]; }

    void pivot(std::size_t r, std::size_t c) {
        Rational p = rows[r][c];
        for (auto& v : rows[r]) v /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j <= num_cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    Rational reduced_cost(const RationalVector& cost, std::size_t col) const {
        Rational r = cost[col];
        for (std::size_t i = 0; i < rows.size(); ++i) r -= cost[basis[i]] * rows[i][col];
        return r;
    }

    // Returns false if the objective is unbounded below.
    bool optimize(const RationalVector& cost, std::size_t allowed_cols) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < allowed_cols; ++j) {
                if (reduced_cost(cost, j) < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering) return true;
            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][*entering] <= 0) continue;
                Rational ratio = rows[i][num_cols] / rows[i][*entering];
                if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (!leaving) return false;
            pivot(*leaving, *entering);
        }
    }
};

} // namespace

Result minimize(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw Error("ShapeMismatch", "rhs length differs from row count");

    Tableau t;
    t.num_cols = n + m;
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw Error("ShapeMismatch", "constraint row length differs from cost length");
        RationalVector row(n + m + 1, Rational(0));
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rational(-a[i][j]) : a[i][j];
        row[n + i] = 1;
        row[n + m] = flip ? Rational(-b[i]) : b[i];
        t.rows.push_back(std::move(row));
        t.basis.push_back(n + i);
    }

    // Phase I: minimize the sum of artificials.
    RationalVector phase1(n + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
    t.optimize(phase1, n + m);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i) infeasibility += phase1[t.basis[i]] * t.rhs(i);
    if (infeasibility != 0) return {Status::Infeasible, {}, {}};

    // Drive remaining artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < n) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < n; ++j) {
            if (t.rows[i][j] != 0) {
                col = j;
                break;
            }
        }
        if (col) {
            t.pivot(i, *col);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    RationalVector phase2(n + m, Rational(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    if (!t.optimize(phase2, n)) return {Status::Unbounded, {}, {}};

    Result res;
    res.status = Status::Optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) res.x[t.basis[i]] = t.rhs(i);
    res.objective = 0;
    for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
    return res;
}

} // namespace toric::lp
