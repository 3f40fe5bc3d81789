#include "hyperforge/check.hpp"

#include <cmath>

#include "hyperforge/interval.hpp"

namespace hyperforge {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::branch_error: return "BRANCH_ERROR";
    case Verdict::skipped: return "SKIPPED";
    case Verdict::conjectural_pass: return "CONJECTURAL-PASS";
    case Verdict::conjectural_fail: return "CONJECTURAL-FAIL";
  }
  return "UNKNOWN";
}

namespace {

long double scale_of(const CheckResult& r) {
  return std::max(magnitude(r.lhs.value), magnitude(r.rhs.value));
}

}  // namespace

void judge(CheckResult& result, const Tolerance& tol, unsigned working_bits, bool conjectural) {
  const Bits prec = std::max(result.lhs.value.precision(), result.rhs.value.precision());
  Complex diff = result.lhs.value.rounded(prec) - result.rhs.value.rounded(prec);
  result.abs_residual = abs(diff);
  const Real scale = max(abs(result.lhs.value), abs(result.rhs.value));
  result.rel_residual = scale.is_zero() ? result.abs_residual : result.abs_residual / scale;
  result.precision_bits = working_bits;

  const long double res = result.abs_residual.to_ld();
  const long double s = scale_of(result);
  if (conjectural) {
    result.verdict = within_tolerance(result, tol) ? Verdict::conjectural_pass : Verdict::conjectural_fail;
    return;
  }
  const long double err = result.lhs.err + result.rhs.err;
  if (!std::isfinite(err)) {
    result.verdict = Verdict::fail;
    result.note = "error bound is not finite";
    return;
  }
  const long double floor = std::ldexp(s, -static_cast<int>(working_bits));
  const long double threshold = std::max({tol.abs, tol.rel * s, 10 * (err + floor)});
  result.verdict = res < threshold ? Verdict::pass : Verdict::fail;
}

bool within_tolerance(const CheckResult& result, const Tolerance& tol) {
  const long double res = result.abs_residual.to_ld();
  return res < std::max(tol.abs, tol.rel * scale_of(result));
}

}  // namespace hyperforge
