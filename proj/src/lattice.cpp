#include "toric/lattice.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <utility>

#include "toric/error.hpp"

namespace toric {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] += factor * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += factor * m(src, c);
}

// col[dst] += factor * col[src]
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += factor * m(r, src);
}

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t); ties
// go to the smallest row, then the smallest column.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& d, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t r = t; r < d.rows(); ++r) {
        for (std::size_t c = t; c < d.cols(); ++c) {
            if (d(r, c) == 0) continue;
            Integer v = abs(d(r, c));
            if (!best || v < best_abs) {
                best = {r, c};
                best_abs = v;
            }
        }
    }
    return best;
}

// Fraction-free Gaussian elimination; returns rank and the sign-corrected
// last pivot (the determinant for full-rank square input).
std::pair<std::size_t, Integer> bareiss(IntMatrix m) {
    std::size_t rank = 0;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pr = rank;
        while (pr < m.rows() && m(pr, col) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != rank) {
            swap_rows(m, pr, rank);
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            for (std::size_t c = col + 1; c < m.cols(); ++c) {
                m(r, c) = (m(r, c) * m(rank, col) - m(r, col) * m(rank, c)) / prev;
            }
            m(r, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    return {rank, sign * prev};
}

} // namespace

Rational frac(const Rational& q) {
    Integer num = boost::multiprecision::numerator(q);
    Integer den = boost::multiprecision::denominator(q);
    return q - Rational(floor_div(num, den));
}

std::string to_string(const Rational& q) {
    Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    auto strip_plus = [](std::string s) {
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return s;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.find('-') != std::string::npos) {
        throw Error("ParseError", "malformed rational '" + text + "'");
    }
    Integer d(strip_plus(den));
    if (d == 0) throw Error("ParseError", "zero denominator in '" + text + "'");
    return Rational(Integer(strip_plus(num)), d);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error("ShapeMismatch", "ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw Error("ShapeMismatch", "column length differs from row count");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error("ShapeMismatch", "matrix product dimensions");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

std::vector<Integer> SNFDecomposition::diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
}

std::size_t SNFDecomposition::rank() const {
    auto diag = diagonal();
    return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](const Integer& d) { return d != 0; }));
}

SNFDecomposition snf(const IntMatrix& a) {
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    const std::size_t n = std::min(a.rows(), a.cols());

    std::size_t t = 0;
    while (t < n) {
        auto pivot = find_pivot(d, t);
        if (!pivot) break;
        swap_rows(d, t, pivot->first);
        swap_rows(u, t, pivot->first);
        swap_cols(d, t, pivot->second);
        swap_cols(v, t, pivot->second);

        // Clear row t and column t; a nonzero remainder becomes the new pivot.
        for (;;) {
            for (std::size_t r = t + 1; r < d.rows(); ++r) {
                if (d(r, t) == 0) continue;
                Integer q = -(d(r, t) / d(t, t));
                add_row(d, r, t, q);
                add_row(u, r, t, q);
            }
            for (std::size_t c = t + 1; c < d.cols(); ++c) {
                if (d(t, c) == 0) continue;
                Integer q = -(d(t, c) / d(t, t));
                add_col(d, c, t, q);
                add_col(v, c, t, q);
            }
            std::optional<std::pair<bool, std::size_t>> smaller; // (is_row, index)
            Integer smallest = abs(d(t, t));
            for (std::size_t r = t + 1; r < d.rows(); ++r) {
                if (d(r, t) != 0 && abs(d(r, t)) < smallest) {
                    smallest = abs(d(r, t));
                    smaller = {true, r};
                }
            }
            for (std::size_t c = t + 1; c < d.cols(); ++c) {
                if (d(t, c) != 0 && abs(d(t, c)) < smallest) {
                    smallest = abs(d(t, c));
                    smaller = {false, c};
                }
            }
            if (!smaller) break;
            if (smaller->first) {
                swap_rows(d, t, smaller->second);
                swap_rows(u, t, smaller->second);
            } else {
                swap_cols(d, t, smaller->second);
                swap_cols(v, t, smaller->second);
            }
        }

        // Divisibility: fold an offending row into row t and redo this step.
        bool fixed = false;
        for (std::size_t r = t + 1; r < d.rows() && !fixed; ++r) {
            for (std::size_t c = t + 1; c < d.cols(); ++c) {
                if (d(r, c) % d(t, t) != 0) {
                    add_row(d, t, r, Integer(1));
                    add_row(u, t, r, Integer(1));
                    fixed = true;
                    break;
                }
            }
        }
        if (fixed) continue;

        if (d(t, t) < 0) {
            for (std::size_t c = 0; c < d.cols(); ++c) d(t, c) = -d(t, c);
            for (std::size_t c = 0; c < u.cols(); ++c) u(t, c) = -u(t, c);
        }
        ++t;
    }
    return {std::move(u), std::move(d), std::move(v)};
}

Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw Error("ShapeMismatch", "determinant of a non-square matrix");
    if (a.rows() == 0) return 1;
    auto [r, det] = bareiss(a);
    return r == a.rows() ? det : Integer(0);
}

std::size_t rank(const IntMatrix& a) {
    return bareiss(a).first;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SNFDecomposition s = snf(a);
    const std::size_t r = s.rank();
    std::vector<std::vector<Integer>> cols;
    for (std::size_t c = r; c < a.cols(); ++c) {
        auto col = s.V.column(c);
        auto lead = std::find_if(col.begin(), col.end(), [](const Integer& x) { return x != 0; });
        if (lead != col.end() && *lead < 0) {
            for (auto& x : col) x = -x;
        }
        cols.push_back(std::move(col));
    }
    return IntMatrix::from_columns(a.cols(), cols);
}

bool is_free_cokernel(const IntMatrix& a) {
    for (const auto& d : snf(a).diagonal()) {
        if (d != 0 && d != 1) return false;
    }
    return true;
}

std::vector<RationalVector> solve_congruence_group(const IntMatrix& bv) {
    if (bv.rows() != bv.cols()) throw Error("ShapeMismatch", "congruence system must be square");
    if (determinant(bv) == 0) throw Error("SingularMatrix", "congruence matrix has zero determinant");
    const std::size_t n = bv.rows();
    SNFDecomposition s = snf(bv);
    std::vector<Integer> divisors = s.diagonal();

    std::vector<RationalVector> out;
    std::vector<Integer> digit(n, 0);
    for (;;) {
        RationalVector a(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational sum = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (digit[k] != 0) sum += Rational(s.V(i, k) * digit[k], divisors[k]);
            }
            a[i] = frac(sum);
        }
        out.push_back(std::move(a));

        std::size_t k = 0;
        while (k < n) {
            if (++digit[k] < divisors[k]) break;
            digit[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace toric
