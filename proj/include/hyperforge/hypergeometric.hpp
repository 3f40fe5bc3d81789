#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperforge/precision.hpp"
#include "hyperforge/rational.hpp"

namespace hyperforge {

struct HypergeometricSpec {
  HypergeometricSpec() = default;
  HypergeometricSpec(std::vector<ExactRational> upper_params,
                     std::vector<ExactRational> lower_params, Complex x)
      : upper(std::move(upper_params)), lower(std::move(lower_params)), argument(std::move(x)) {}

  // Throws DomainError for nonpositive-integer lower parameters or p > q + 1.
  void validate() const;

  std::vector<ExactRational> upper;
  std::vector<ExactRational> lower;
  Complex argument;
};

// Generalized hypergeometric series by direct summation. For p = q + 1 the
// argument must satisfy |x| < 1. Rigorous for |x| <= 1/2 (or terminating
// series), heuristic otherwise.
AppValue pfq(const HypergeometricSpec& spec, const PrecisionContext& ctx);

// Convenience wrappers.
AppValue hyp2f1(const ExactRational& a, const ExactRational& b, const ExactRational& c,
                const Complex& x, const PrecisionContext& ctx);
AppValue hyp3f2(const ExactRational& a1, const ExactRational& a2, const ExactRational& a3,
                const ExactRational& b1, const ExactRational& b2, const Complex& x,
                const PrecisionContext& ctx);

// p+1Fp at x = 1 for positive parameter excess g = sum(lower) - sum(upper):
// partial sums at n0 * 2^i terms are extrapolated assuming
// S_n = S + sum_k d_k n^-(g+k). Heuristic error from successive orders.
AppValue pfq_unit(std::span<const ExactRational> upper, std::span<const ExactRational> lower,
                  const PrecisionContext& ctx, std::size_t base_terms = 64);

// 3F2(a, 1/2, 1-a; 1, 1; t) on C minus [1, inf), through
// 2F1(a/2, (1-a)/2; 1; t)^2 and, when |t| is large, the Pfaff transformation.
AppValue clausen_3f2(const ExactRational& alpha, const Complex& t, const PrecisionContext& ctx);

// Phi(X) = sum_{m>=1} c_m X^m / m with c_m = (a)_m (1/2)_m (1-a)_m / m!^3,
// continued along the segment [0, X] for |X| > 1/2. DomainError on [1, inf).
AppValue mahler_log_series(const ExactRational& alpha, const Complex& X, const PrecisionContext& ctx);

// 5F4(1+a, 3/2, 2-a, 1, 1; 2, 2, 2, 2; X), equal to Phi(X) / (c_1 X), on C minus [1, inf).
AppValue mahler_5f4(const ExactRational& alpha, const Complex& X, const PrecisionContext& ctx);

}  // namespace hyperforge
