#include "hyperforge/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hyperforge {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(unsigned n, const Real& x, Real& p, Real& dp) {
  const Bits prec = x.precision();
  Real p0(1L, prec);
  Real p1 = x;
  for (unsigned k = 2; k <= n; ++k) {
    Real p2 = (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) /
              static_cast<long>(k);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  p = p1;
  dp = (x * p1 - p0) * static_cast<long>(n) / (x * x - 1L);
}

}  // namespace

GaussRule gauss_legendre(unsigned n, Bits prec) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussRule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  if (n == 1) {
    rule.nodes.emplace_back(0L, prec);
    rule.weights.emplace_back(2L, prec);
    return rule;
  }
  const Bits wp = prec + 32;
  const Real tol = ldexp(Real(1L, wp), -static_cast<long>(wp) + 8);
  const double pi = 3.14159265358979323846;
  std::vector<Real> half_nodes, half_weights;
  for (unsigned i = 1; i <= (n + 1) / 2; ++i) {
    Real x(std::cos(pi * (i - 0.25) / (n + 0.5)), wp);
    Real p(wp), dp(wp);
    for (int iter = 0; iter < 100; ++iter) {
      legendre(n, x, p, dp);
      Real dx = p / dp;
      x -= dx;
      if (abs(dx) <= tol) break;
    }
    legendre(n, x, p, dp);
    Real w = Real(2L, wp) / ((1L - x * x) * dp * dp);
    half_nodes.push_back(x.rounded(prec));
    half_weights.push_back(w.rounded(prec));
  }
  // Ascending order: negatives first.
  for (std::size_t i = 0; i < half_nodes.size(); ++i) {
    const bool centre = (n % 2 == 1) && i + 1 == half_nodes.size();
    if (!centre) {
      rule.nodes.push_back(-half_nodes[i]);
      rule.weights.push_back(half_weights[i]);
    }
  }
  for (std::size_t i = half_nodes.size(); i-- > 0;) {
    Real x = half_nodes[i];
    if ((n % 2 == 1) && i + 1 == half_nodes.size()) x = Real(0L, prec);
    rule.nodes.push_back(x);
    rule.weights.push_back(half_weights[i]);
  }
  return rule;
}

const GaussRule& cached_gauss_legendre(unsigned n, Bits prec) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, Bits>, std::unique_ptr<GaussRule>> rules;
  const auto key = std::make_pair(n, prec);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = rules.find(key);
    if (it != rules.end()) return *it->second;
  }
  auto rule = std::make_unique<GaussRule>(gauss_legendre(n, prec));
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = rules.emplace(key, std::move(rule));
  return *it->second;
}

}  // namespace hyperforge
