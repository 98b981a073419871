#pragma once

#include <gmpxx.h>

#include <vector>

namespace immsnp {

// Exact feasibility of { t >= 0 : A t = b } by phase-one simplex over the
// rationals with Bland's rule. A is row-major, rows x cols.
bool exact_feasible(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b);

}  // namespace immsnp
