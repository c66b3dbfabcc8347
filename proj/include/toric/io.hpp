#pragma once

#include <cstddef>
#include <string>

#include "toric/chen_ruan.hpp"
#include "toric/error.hpp"
#include "toric/polytope.hpp"

namespace toric::io {

/// Error("ParseError") with the 1-based position of the offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("ParseError", "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Polytope file grammar (see docs/polytope-format.md):
///
///   # comment
///   dimension 2
///   facet normal=0,1 label=1 offset=0
///   facet normal=-2,-1 label=1 offset=2
///
/// Facets are numbered 1..m in file order. The result is not validated.
LabeledPolytope parse_polytope(const std::string& text);
LabeledPolytope read_polytope_file(const std::string& path);

/// Serializes in the grammar accepted by parse_polytope.
std::string write_polytope(const LabeledPolytope& p);

/// Parses a polynomial such as "x1^2 - 3*x1*x2 + 5" in num_vars variables.
Polynomial parse_polynomial(const std::string& text, std::size_t num_vars);

/// Parses a sum of terms "coeff * x1^e1*...*xm^em @ k" where k is a sector
/// index in canonical order, e.g. "3*x1^2*x2 @ 1 - x3 @ 0 + 2 @ 2". Terms are
/// reduced into their sector's presentation. Column numbers refer to the
/// string; the line is always 1.
CRClass parse_class(const std::string& text, const ChenRuanRing& ring);

} // namespace toric::io
