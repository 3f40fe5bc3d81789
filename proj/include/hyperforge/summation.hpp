#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hyperforge/precision.hpp"

namespace hyperforge {

// Called with n = 0, 1, 2, ... in order; generators may keep state.
using TermGenerator = std::function<Complex(std::size_t n)>;

// Upper bound on |sum_{m>n} t_m| given n and |t_n|. Returns +inf while the
// bound is not yet applicable.
using TailMajorant = std::function<long double(std::size_t n, long double abs_term)>;

struct SumOptions {
  // Stop once the tail is below target_rel * |S| or below target_abs.
  // A negative target_rel means 2^-working_bits.
  long double target_rel = -1.0L;
  long double target_abs = 0.0L;
  std::size_t min_terms = 2;
  // Roundings per generated term, used for the rounding budget.
  long double ops_per_term = 8.0L;
};

struct SumReport {
  std::size_t terms = 0;
  bool accelerated = false;
};

// Sums t_0 + t_1 + ... at ctx.compute_bits(). With a majorant the stop rule
// and the result are rigorous; without one a ratio-based tail estimate is
// used and the result is labelled heuristic.
AppValue sum_with_tail(const TermGenerator& term, const TailMajorant& majorant,
                       const PrecisionContext& ctx, const SumOptions& options = {},
                       SumReport* report = nullptr);

// Levin u-transform of order k from partial sums s_0..s_k and terms a_0..a_k.
Complex levin_u(std::span<const Complex> sums, std::span<const Complex> terms,
                std::size_t k, Bits prec);

// Direct summation within `term_budget` terms; if the heuristic stop is not
// reached, the partial sums are accelerated with the Levin u-transform.
AppValue sum_accelerated(const TermGenerator& term, std::size_t term_budget,
                         const PrecisionContext& ctx, SumReport* report = nullptr);

// Limit S of samples s(n_i) assuming s(n) = S + sum_k d_k n^-(g+k).
// Uses as many correction terms as there are extra samples.
Real richardson_limit(std::span<const Real> sums, std::span<const double> n,
                      const Real& g, Bits prec);

}  // namespace hyperforge
