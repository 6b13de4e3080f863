#pragma once

#include "rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lgcy {

// Incremental sparse Gaussian elimination over the rationals. Rows are fed one
// at a time and reduced against the pivots seen so far; pivoting follows the
// caller's variable order, so callers should number variables in a locality
// friendly way (exponent-major for the series solvers).
class SparseLinearSystem {
  public:
    using Row = std::map<long, Rational>;

    // Returns false if the row is inconsistent with the system so far.
    bool add_equation(Row row, Rational rhs);

    bool consistent() const { return consistent_; }

    // Particular solution with all free variables set to zero.
    std::vector<Rational> solve(long n_vars) const;

  private:
    std::map<long, std::pair<Row, Rational>> pivots_; // pivot var -> normalized row, rhs
    bool consistent_ = true;
};

} // namespace lgcy
