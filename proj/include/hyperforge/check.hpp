#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperforge/precision.hpp"

namespace hyperforge {

enum class Verdict { pass, fail, branch_error, skipped, conjectural_pass, conjectural_fail };

const char* to_string(Verdict v);

struct Tolerance {
  long double rel = 0;
  long double abs = 0;
};

struct CheckResult {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  AppValue lhs;
  AppValue rhs;
  Real abs_residual;
  Real rel_residual;
  Verdict verdict = Verdict::skipped;
  unsigned precision_bits = 0;
  double elapsed_ms = 0;
  std::string note;
};

// Residuals of lhs - rhs and the verdict: PASS when the absolute residual is
// below max(tol.abs, tol.rel * scale, 10 * (err_lhs + err_rhs + 2^-bits * scale)),
// scale = max(|lhs|, |rhs|). Conjectural checks compare against the tolerance
// alone and yield CONJECTURAL-PASS / CONJECTURAL-FAIL.
void judge(CheckResult& result, const Tolerance& tol, unsigned working_bits, bool conjectural);

// True when the residual is within the tolerance bounds only (no error widening).
bool within_tolerance(const CheckResult& result, const Tolerance& tol);

}  // namespace hyperforge
