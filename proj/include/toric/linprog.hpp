#pragma once

#include <vector>

#include "toric/lattice.hpp"

namespace toric::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    RationalVector x;    // a primal solution when status == Optimal
    Rational objective;  // c . x when status == Optimal
};

/// Exact two-phase simplex with Bland's rule:
///   minimize c . x  subject to  A x = b,  x >= 0.
/// `a` is given row by row; every row must have c.size() entries.
Result minimize(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c);

} // namespace toric::lp
