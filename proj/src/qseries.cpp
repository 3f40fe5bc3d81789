#include "hyperforge/qseries.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hyperforge/errors.hpp"
#include "hyperforge/hypergeometric.hpp"
#include "hyperforge/interval.hpp"
#include "hyperforge/summation.hpp"

namespace hyperforge {

namespace {

long double mag(const Complex& z) { return magnitude(z); }

void require_unit_disk(const Complex& q, bool allow_zero) {
  const long double m = mag(q);
  if (!(m < 1.0L)) throw DomainError("nome must satisfy |q| < 1");
  if (!allow_zero && q.is_zero()) throw DomainError("nome must be nonzero");
}

// Truncation target for products; a little below 2^-working_bits.
long double product_target(const PrecisionContext& ctx) {
  return std::ldexp(1.0L, -static_cast<int>(ctx.working_bits + 16));
}

Complex leading_power(const Complex& q, const ExactRational& r, QPowerBranch branch, Bits prec) {
  if (branch == QPowerBranch::modulus) {
    return Complex(pow(abs(q), r.to_real(prec)));
  }
  if (r.is_integer()) return pow(q, r.numerator().get_si());
  return pow(q, r.to_real(prec));
}

// (q^d; q^d)_inf
AppValue euler_factor(const Complex& q, int d, const PrecisionContext& ctx) {
  Complex qd = pow(q, static_cast<long>(d));
  return qpoch_inf(qd, qd, ctx);
}

}  // namespace

void EtaQuotientSpec::validate() const {
  for (const auto& [d, e] : exponents) {
    if (d < 1) throw DomainError("eta quotient index must be positive, got " + std::to_string(d));
  }
}

int EtaQuotientSpec::total_exponent() const {
  int s = 0;
  for (const auto& [d, e] : exponents) s += e;
  return s;
}

AppValue qpoch_inf(const Complex& x_in, const Complex& q_in, const PrecisionContext& ctx) {
  require_unit_disk(q_in, true);
  const Bits prec = ctx.compute_bits();
  const Complex x = x_in.rounded(prec), q = q_in.rounded(prec);
  const long double aq = mag(q), ax = mag(x);
  const long double target = product_target(ctx);
  Complex product(Real(1L, prec));
  Complex w = x;
  long double tail = ax / (1 - aq);
  std::size_t n = 0;
  while (tail >= target) {
    if (n >= ctx.max_terms) throw TermCapExceeded("q-Pochhammer product did not converge");
    product *= Real(1L, prec) - w;
    w *= q;
    tail *= aq;
    ++n;
  }
  // prod_{n>=N} |1 - x q^n| differs from 1 by at most exp(tail) - 1.
  const long double pm = mag(product);
  const long double trunc = pm * std::expm1(tail);
  return AppValue(product, trunc + rounding_bound(pm, prec, 4.0L * (n + 1)));
}

AppValue eta_quotient_value(const EtaQuotientSpec& spec, const Complex& q_in,
                            const PrecisionContext& ctx, QPowerBranch branch) {
  spec.validate();
  require_unit_disk(q_in, false);
  const Bits prec = ctx.compute_bits();
  const Complex q = q_in.rounded(prec);
  AppValue result(leading_power(q, spec.q_power, branch, prec), 0.0L);
  result.err = rounding_bound(mag(result.value), prec, 8);
  for (const auto& [d, e] : spec.exponents) {
    if (e == 0) continue;
    result = av_mul(result, av_pow(euler_factor(q, d, ctx), e));
  }
  return result;
}

AppValue eisenstein_G(const Complex& q_in, const PrecisionContext& ctx) {
  require_unit_disk(q_in, false);
  const Bits prec = ctx.compute_bits();
  const Complex q = q_in.rounded(prec);
  const long double aq = mag(q);
  Complex w = q;
  TermGenerator gen = [&](std::size_t k) {
    if (k == 0) return Complex(-log(abs(q)));
    // log|1 - w| = log1p(|w|^2 - 2 Re w) / 2
    Real arg = w.re * w.re + w.im * w.im - 2L * w.re;
    Real term = log1p(arg) * static_cast<long>(120 * k * k);
    w *= q;
    return Complex(term);
  };
  TailMajorant majorant = [aq](std::size_t k, long double) {
    if (k == 0) return std::numeric_limits<long double>::infinity();
    const long double n1 = static_cast<long double>(k + 1);
    const long double rho = (n1 + 1) * (n1 + 1) / (n1 * n1) * aq;
    if (rho >= 1) return std::numeric_limits<long double>::infinity();
    return 240 * n1 * n1 * std::pow(aq, n1) / ((1 - aq) * (1 - rho));
  };
  AppValue g = sum_with_tail(gen, majorant, ctx);
  g.value.im = Real(prec);
  return g;
}

AppValue eisenstein_M(const Complex& q_in, const PrecisionContext& ctx) {
  require_unit_disk(q_in, true);
  const Bits prec = ctx.compute_bits();
  const Complex q = q_in.rounded(prec);
  const long double aq = mag(q);
  Complex w = q;
  const Real one(1L, prec);
  TermGenerator gen = [&](std::size_t k) {
    if (k == 0) return Complex(one);
    Complex term = w / (one - w) * Real(static_cast<long>(240 * k * k * k), prec);
    w *= q;
    return term;
  };
  TailMajorant majorant = [aq](std::size_t k, long double) {
    if (k == 0) return std::numeric_limits<long double>::infinity();
    const long double n1 = static_cast<long double>(k + 1);
    const long double c = (n1 + 1) / n1;
    const long double rho = c * c * c * aq;
    if (rho >= 1) return std::numeric_limits<long double>::infinity();
    return 240 * n1 * n1 * n1 * std::pow(aq, n1) / ((1 - aq) * (1 - rho));
  };
  return sum_with_tail(gen, majorant, ctx);
}

AppValue nome(int j, const Real& alpha_in, const PrecisionContext& ctx) {
  if (j < 2 || j > 4) throw DomainError("nome signature must be 2, 3 or 4");
  const Bits prec = ctx.compute_bits();
  const Real alpha = alpha_in.rounded(prec);
  if (!(alpha > 0L) || !(alpha < 1L)) throw DomainError("nome requires 0 < alpha < 1");
  const ExactRational a(1, j);
  const ExactRational b = ExactRational(1) - a;
  AppValue num = hyp2f1(a, b, 1, Complex(1L - alpha), ctx);
  AppValue den = hyp2f1(a, b, 1, Complex(alpha), ctx);
  const Real pi = const_pi(prec);
  const Real c = pi / sin(pi / static_cast<long>(j));
  const Real ratio = num.real() / den.real();
  const long double dr = (num.err + std::fabs(ratio.to_ld()) * den.err) / std::fabs(den.real().to_ld());
  Real q = exp(-c * ratio);
  const long double qm = q.to_ld();
  const long double err = qm * c.to_ld() * dr * (1 + 1e-3L) + rounding_bound(qm, prec, 16);
  return AppValue(q, err, weakest(num.rigor, den.rigor));
}

EtaQuotientSpec v_spec(int j) {
  EtaQuotientSpec s;
  s.q_power = ExactRational(1, 2);
  if (j == 1) {
    s.exponents = {{1, 6}, {2, -6}, {3, -6}, {6, 6}};
  } else if (j == 2) {
    s.exponents = {{1, -2}, {2, 6}, {3, 2}, {4, -4}, {6, -6}, {12, 4}};
  } else {
    throw DomainError("v_j is defined for j = 1, 2");
  }
  return s;
}

AppValue s_function(int j, const Complex& q_in, const PrecisionContext& ctx, QPowerBranch branch) {
  require_unit_disk(q_in, false);
  const Bits prec = ctx.compute_bits();
  const Complex q = q_in.rounded(prec);
  const Complex inv_q = leading_power(q, ExactRational(-1), branch, prec);
  switch (j) {
    case 2: {
      AppValue p = qpoch_inf(-q, q * q, ctx);
      return av_scale(av_pow(p, 24), inv_q);
    }
    case 3: {
      AppValue ratio = av_mul(av_pow(euler_factor(q, 3, ctx), 6),
                             av_pow(euler_factor(q, 1, ctx), -6));
      AppValue inner = av_add(av_scale(ratio, q * Real(27L, prec)), av_pow(ratio, -1));
      return av_scale(av_pow(inner, 2), inv_q);
    }
    case 4: {
      AppValue e1 = euler_factor(q, 1, ctx);
      AppValue e2 = euler_factor(q, 2, ctx);
      AppValue e4 = euler_factor(q, 4, ctx);
      AppValue outer = av_mul(av_pow(e2, 24), av_pow(e1, -24));
      AppValue x = av_mul(av_mul(av_pow(e1, 4), av_pow(e4, 8)), av_pow(e2, -12));
      AppValue inner = av_add(av_scale(x, q * Real(16L, prec)), av_pow(x, -1));
      return av_scale(av_mul(outer, av_pow(inner, 4)), inv_q);
    }
    default:
      throw DomainError("s_j is defined for j = 2, 3, 4");
  }
}

AppValue v_function(int j, const Complex& q, const PrecisionContext& ctx, QPowerBranch branch) {
  return eta_quotient_value(v_spec(j), q, ctx, branch);
}

AppValue t_function(int j, const Complex& q, const PrecisionContext& ctx, QPowerBranch branch) {
  AppValue v = v_function(j, q, ctx, branch);
  AppValue inv = av_pow(v, -1);
  if (j == 1) return av_add(v, inv);
  AppValue diff = av_sub(v, inv);
  AppValue sq = av_pow(diff, 2);
  return av_neg(sq);
}

}  // namespace hyperforge
