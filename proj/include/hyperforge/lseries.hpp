#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperforge/precision.hpp"
#include "hyperforge/qseries.hpp"

namespace hyperforge {

struct CoefficientSeries {
  std::vector<std::int64_t> coeffs;  // coeffs[n] = a_n for n = 0..N
  EtaQuotientSpec source;
  int weight = 0;
  bool integral_weight = true;
  bool cusp = true;  // false when the expansion has a constant term

  std::size_t size() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// Exact q-expansion of an eta quotient up to q^N. Jacobi and pentagonal
// factors are expanded sparsely; dense blocks are multiplied with exact NTTs.
CoefficientSeries eta_coeffs(const EtaQuotientSpec& spec, std::size_t N);

// Smallest n <= N with |a_n| > d(n) n^{(w-1)/2}, if any.
std::optional<std::size_t> deligne_violation(const CoefficientSeries& cs);

// Upper bound for sum_{n>N} d(n) n^{-sigma}, sigma > 1.
long double divisor_tail_bound(long double N, long double sigma);

enum class TailMode {
  rigorous,   // divisor-bound majorant
  heuristic,  // twice the largest partial-sum movement over (N/2, N]
};

// sum_{n<=N} a_n n^{-s} plus a tail estimate. Requires s > (w+1)/2.
AppValue lvalue_direct(const CoefficientSeries& cs, long s, const PrecisionContext& ctx,
                       TailMode mode = TailMode::rigorous, unsigned threads = 1);

// L(s) from the completed L-function Lambda(s) = (sqrt(level)/2pi)^s Gamma(s) L(s),
// assuming Lambda(s) = sign * Lambda(w - s). The split point is moved from 1 to
// 6/5; disagreement means the functional-equation data is wrong.
AppValue lvalue_smoothed(const CoefficientSeries& cs, long s, long level, int weight, int sign,
                         const PrecisionContext& ctx);
std::size_t smoothed_terms_needed(long level, const PrecisionContext& ctx);

struct NamedForm {
  std::string name;
  EtaQuotientSpec spec;
  long level;
  int weight;
  int sign;
};

// "f8" (level 8, weight 3), "g12" (level 12, weight 3), "f15" (level 15, weight 2).
const std::vector<NamedForm>& named_forms();
const NamedForm& named_form(const std::string& name);

}  // namespace hyperforge
