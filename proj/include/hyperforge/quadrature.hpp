#pragma once

#include <vector>

#include "hyperforge/precision.hpp"

namespace hyperforge {

struct GaussRule {
  std::vector<Real> nodes;    // on [-1, 1]
  std::vector<Real> weights;
};

// n-point Gauss–Legendre rule at the given precision (Newton on P_n).
GaussRule gauss_legendre(unsigned n, Bits prec);

}  // namespace hyperforge

namespace hyperforge {

// Memoized gauss_legendre; safe to call from several threads.
const GaussRule& cached_gauss_legendre(unsigned n, Bits prec);

}  // namespace hyperforge
