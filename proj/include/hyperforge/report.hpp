#pragma once

#include <string>
#include <vector>

#include "hyperforge/check.hpp"

namespace hyperforge {

// Decimal text that round-trips at `bits` of precision.
std::string decimal(const Real& x, unsigned bits);
std::string decimal_err(long double err);

// JSON array of results with fields id, params, lhs, rhs, abs_residual,
// rel_residual, verdict, bits, ms (and note when present).
std::string render_json(const std::vector<CheckResult>& results);
// One line per result followed by a summary line.
std::string render_text(const std::vector<CheckResult>& results);

// 0 when every non-conjectural result is PASS or BRANCH_ERROR, else 1.
int verify_exit_code(const std::vector<CheckResult>& results);

}  // namespace hyperforge
