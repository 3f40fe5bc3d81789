#pragma once

#include <cstddef>
#include <deque>
#include <mutex>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hyperforge/check.hpp"
#include "hyperforge/precision.hpp"

namespace hyperforge {

enum class SequenceKind {
  domb,  // a_n = sum_k C(n,k)^2 C(2k,k) C(2n-2k,n-k)
  b,     // b_n = C(2n,n) sum_k C(n,k)^2 C(2k,k)
};

// Exact terms of a binomial-sum sequence, memoized in an append-only cache
// that is safe to share between threads.
class BinomialSumSequence {
 public:
  explicit BinomialSumSequence(SequenceKind kind) : kind_(kind) {}
  mpz_class at(std::size_t n);
  // Terms 0..n inclusive.
  std::vector<mpz_class> prefix(std::size_t n);

 private:
  void extend_to(std::size_t n);

  SequenceKind kind_;
  std::mutex mutex_;
  std::deque<mpz_class> values_;
  std::deque<mpz_class> inner_;  // sum_k C(n,k)^2 C(2k,k) for the b sequence
};

mpz_class domb(std::size_t n);
mpz_class sequence_b(std::size_t n);
// Direct evaluation of the defining binomial sum, without the cache.
mpz_class binomial_sum_direct(SequenceKind kind, std::size_t n);

// g_1(u), |u| > 6, and g_2(u), |u| > 16, from their Taylor series in 1/u.
AppValue g_series(int j, const Complex& u, const PrecisionContext& ctx);
// f_j(u) = Re[log u - c_j/u 5F4(...; x_j/u)] for j in {2, 3, 4}, continued
// harmonically to every u off the real segment (0, x_j].
AppValue f_series(int j, const Complex& u, const PrecisionContext& ctx);
// Same, with the input error of u propagated.
AppValue f_series(int j, const AppValue& u, const PrecisionContext& ctx);
AppValue g_series(int j, const AppValue& u, const PrecisionContext& ctx);

struct LaurentPolynomial {
  using Term = std::pair<std::vector<int>, Complex>;

  explicit LaurentPolynomial(int vars) : variables(vars) {}
  void add(std::vector<int> exponents, const Complex& coefficient);
  Complex evaluate(const std::vector<Complex>& point) const;

  int variables;
  std::vector<Term> terms;
};

// Trapezoidal rule of log|P| on an N^m grid of the torus. The value is the
// grid-N result; err is |I_N - I_2N| (heuristic).
AppValue mahler_torus_integral(const LaurentPolynomial& p, unsigned grid, const PrecisionContext& ctx);

enum class MahlerFamily { g1, g2, f2, f3, f4 };

// The polynomial whose Mahler measure (times the family's multiplier) is the
// named function at u.
LaurentPolynomial mahler_polynomial(MahlerFamily family, const Complex& u, Bits prec);
long mahler_multiplier(MahlerFamily family);
AppValue mahler_quadrature(MahlerFamily family, const Complex& u, unsigned grid, const PrecisionContext& ctx);

// m(k + x + 1/x + y + 1/y) for real k >= 0, by Jensen's formula in x and
// Gauss–Legendre in the remaining angle.
AppValue mahler_two_variable(const Real& k, const PrecisionContext& ctx);

// I_0(2u) = sum u^{2n} / n!^2
AppValue bessel_I0(const Real& u, const PrecisionContext& ctx);

// int_0^inf exp(-3(x + 1/x) u) I_0(2u)^3 du against
// x / (3(1 + 3x^2)) 3F2(1/4, 1/2, 3/4; 1, 1; 256 x^2 / (9 (1 + 3x^2)^4)).
CheckResult bessel_laplace_check(const Real& x, const PrecisionContext& ctx);

}  // namespace hyperforge
