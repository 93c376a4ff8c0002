#pragma once

// Leading-coefficient extraction for eventually quasi-polynomial dimension
// counts.  dims[m] is assumed to agree on the window [mlo, mhi] with a
// quasi-polynomial of degree `deg` and period `period` whose leading
// coefficient is the same in every residue class; the coefficient is
// recovered exactly from finite differences.

#include <utility>
#include <vector>

#include "pdo/scalar.hpp"

namespace pdo {

// Exact leading coefficient, or throws NotStabilized when the window does not
// exhibit constant deg-th differences (per residue class) with a common value
// of the implied coefficient.
Scalar quasi_leading(const std::vector<int>& dims, int mlo, int mhi, int deg,
                     int period);

// Tries periods 1..max_period in order and returns {coefficient, period} for
// the first that fits; throws NotStabilized when none does.
std::pair<Scalar, int> quasi_leading_auto(const std::vector<int>& dims,
                                          int mlo, int mhi, int deg,
                                          int max_period);

}  // namespace pdo
