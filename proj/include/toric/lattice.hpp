#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace toric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

/// Fractional part in [0, 1).
Rational frac(const Rational& q);

/// Renders q as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p"; throws toric::Error("ParseError") on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Integer> column(std::size_t c) const;
    IntMatrix transpose() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// D = U * A * V with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SNFDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    /// The min(rows, cols) diagonal entries of D.
    std::vector<Integer> diagonal() const;
    /// Number of nonzero diagonal entries.
    std::size_t rank() const;
};

SNFDecomposition snf(const IntMatrix& a);

/// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& a);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

/// Columns form a saturated integral basis of ker(A). Each column is
/// normalized so its first nonzero entry is positive.
IntMatrix kernel_basis(const IntMatrix& a);

/// True iff every nonzero elementary divisor of A is 1.
bool is_free_cokernel(const IntMatrix& a);

/// All a in [0,1)^n with Bv * a integral, sorted lexicographically. The
/// result has |det Bv| elements. Throws Error("SingularMatrix") when
/// det Bv = 0 and Error("ShapeMismatch") when Bv is not square.
std::vector<RationalVector> solve_congruence_group(const IntMatrix& bv);

} // namespace toric
