#include <cmath>
#include <string>

#include "catalog_internal.hpp"
#include "hyperforge/errors.hpp"
#include "hyperforge/hypergeometric.hpp"
#include "hyperforge/mahler.hpp"

namespace hyperforge::catalog_detail {

namespace {

using R = ExactRational;

constexpr Tolerance kTight{1e-30L, 0};

std::vector<ParamPoint> points(const std::string& name, std::initializer_list<const char*> values) {
  std::vector<ParamPoint> out;
  for (const char* v : values) out.push_back(ParamPoint{{name, v}});
  return out;
}

Complex at(const R& x, const EvalContext& ec) { return Complex(x.to_real(ec.ctx.compute_bits())); }

AppValue log_of(const R& x, const EvalContext& ec) {
  if (x.sign() <= 0) throw DomainError("logarithm of a nonpositive number");
  return constant(log(x.to_real(ec.ctx.compute_bits())));
}

// sum_{n >= first} x^n c_n / n^(divide ? 1 : 0), |c_n| <= growth^n
AppValue sequence_series(SequenceKind kind, const R& x, std::size_t first, bool divide,
                         long growth, const EvalContext& ec) {
  const Bits prec = ec.ctx.compute_bits();
  const long double rho = std::fabs(x.to_double()) * static_cast<long double>(growth);
  if (!(rho < 1)) throw DomainError("series argument outside the disc of convergence");
  const Real xr = x.to_real(prec);
  auto term = [&, first](std::size_t m) {
    const std::size_t n = m + first;
    const mpz_class c = kind == SequenceKind::domb ? domb(n) : sequence_b(n);
    Real t = pow(xr, static_cast<long>(n)) * Real(c, prec);
    if (divide) t /= static_cast<long>(n);
    return Complex(t);
  };
  return sum_with_tail(term, poly_geometric_majorant(0, 1, rho, std::pow(rho, static_cast<long double>(first))),
                       ec.ctx);
}

AppValue f5f4(const R& alpha, const R& x, const EvalContext& ec) { return mahler_5f4(alpha, at(x, ec), ec.ctx); }

AppValue f3f2(const R& a, const R& x, const EvalContext& ec) {
  return hyp3f2(a, R(1, 2), R(1) - a, R(1), R(1), at(x, ec), ec.ctx);
}

AppValue f2f1(const R& a, const R& x, const EvalContext& ec) {
  return hyp2f1(a, R(1) - a, R(1), at(x, ec), ec.ctx);
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

Sides eq_5f4_one(const R& u, const EvalContext& ec) {
  require(u.sign() != 0 && u < R(1, 16) && u > R(-1, 16), "requires 0 < |u| < 1/16");
  const Bits prec = ec.ctx.compute_bits();
  AppValue lhs = sequence_series(SequenceKind::domb, u, 1, true, 16, ec);
  const R a = R(1) - R(16) * u, b = R(1) - R(4) * u;
  AppValue rhs = combine({{R(1, 5), log_of(a / b.pow(8), ec)},
                          {R(4) * u / (R(5) * a.pow(3)), f5f4(R(1, 3), R(-108) * u / a.pow(3), ec)},
                          {R(32) * u * u / (R(5) * b.pow(3)), f5f4(R(1, 3), R(108) * u * u / b.pow(3), ec)}},
                         prec);
  return {lhs, rhs, {}, {}};
}

Sides eq_5f4_two(const R& u, const EvalContext& ec, const R& last_coefficient) {
  require(u.sign() != 0 && u > R(-1, 10), "requires small nonzero u > -1/10");
  const Bits prec = ec.ctx.compute_bits();
  const R x = u / (R(9) * (R(1) + u).pow(2));
  AppValue lhs = sequence_series(SequenceKind::b, x, 1, true, 36, ec);
  const R a = R(3) + u, b = R(1) + R(3) * u;
  AppValue rhs = combine(
      {{R(2, 5), log_of(R(27) * (R(1) + u).pow(5) / (a.pow(3) * b), ec)},
       {R(4) * u.pow(3) / (R(5) * a.pow(4)), f5f4(R(1, 4), R(256) * u.pow(3) / (R(9) * a.pow(4)), ec)},
       {last_coefficient * u / b.pow(4), f5f4(R(1, 4), R(256) * u / (R(9) * b.pow(4)), ec)}},
      prec);
  return {lhs, rhs, {}, {}};
}

Sides thm31_t1(const R& u, const EvalContext& ec) {
  const R b = R(1) - R(4) * u;
  require(b.sign() > 0, "requires u < 1/4");
  AppValue lhs = f3f2(R(1, 3), R(108) * u * u / b.pow(3), ec);
  AppValue series = sequence_series(SequenceKind::domb, u, 0, false, 16, ec);
  return {lhs, av_scale(series, b.to_real(ec.ctx.compute_bits())), {}, {}};
}

Sides thm31_t2(const R& u, const EvalContext& ec, const R& denominator_slope) {
  const R b = R(1) + R(3) * u;
  require(b.sign() > 0 && (R(1) + u).sign() > 0, "requires u > -1/3");
  AppValue lhs = f3f2(R(1, 4), R(256) * u / (R(9) * b.pow(4)), ec);
  const R x = u / (R(9) * (R(1) + u).pow(2));
  AppValue series = sequence_series(SequenceKind::b, x, 0, false, 36, ec);
  const R factor = b / (R(1) + denominator_slope * u);
  return {lhs, av_scale(series, factor.to_real(ec.ctx.compute_bits())), {}, {}};
}

void add_five_f_four(std::vector<IdentityCheck>& out) {
  out.push_back({"EQ_5F4_ONE", "sum u^n a_n / n as a log plus two 5F4(4/3,3/2,5/3,1,1;2,2,2,2) terms",
                 "0 < |u| < 1/16", {"u"}, points("u", {"1/100", "1/40"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) { return eq_5f4_one(rational_param(p, "u"), ec); }});
  out.push_back({"EQ_5F4_TWO",
                 "sum (u/(9(1+u)^2))^n b_n / n as a log plus two 5F4(5/4,3/2,7/4,1,1;2,2,2,2) terms",
                 "small u > 0", {"u"}, points("u", {"1/100", "1/40"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   return eq_5f4_two(rational_param(p, "u"), ec, R(4, 15));
                 }});
  out.push_back({"EQ_5F4_TWO_PERTURBED", "control: EQ_5F4_TWO with the coefficient 4/15 replaced by 5/15",
                 "small u > 0", {"u"}, points("u", {"1/100", "1/40"}), kTight, false, true,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   return eq_5f4_two(rational_param(p, "u"), ec, R(5, 15));
                 }});
}

void add_three_f_two(std::vector<IdentityCheck>& out) {
  out.push_back({"THM31_T1", "3F2(1/3,1/2,2/3;1,1;108u^2/(1-4u)^3) = (1-4u) sum u^n a_n", "|u| small",
                 {"u"}, points("u", {"1/100", "-1/100", "1/50"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) { return thm31_t1(rational_param(p, "u"), ec); }});
  out.push_back({"THM31_T2",
                 "3F2(1/4,1/2,3/4;1,1;256u/(9(1+3u)^4)) = (1+3u)/(1+u) sum (u/(9(1+u)^2))^n b_n",
                 "|u| small", {"u"}, points("u", {"1/100", "-1/100", "1/50"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   return thm31_t2(rational_param(p, "u"), ec, R(1));
                 }});
  out.push_back({"THM31_T2_PERTURBED", "control: THM31_T2 with (1+3u)/(1+u) replaced by (1+3u)/(1+2u)",
                 "|u| small", {"u"}, points("u", {"1/100", "-1/100", "1/50"}), kTight, false, true,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   return thm31_t2(rational_param(p, "u"), ec, R(2));
                 }});

  out.push_back({"AUX_3F2_1",
                 "3F2(1/3,1/2,2/3;1,1;-108u/(1-16u)^3) = (1-16u)/(1-4u) 3F2(1/3,1/2,2/3;1,1;108u^2/(1-4u)^3)",
                 "|u| small", {"u"}, points("u", {"1/100", "-1/100", "1/50"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   const R u = rational_param(p, "u");
                   const R a = R(1) - R(16) * u, b = R(1) - R(4) * u;
                   require(a.sign() > 0 && b.sign() > 0, "requires u < 1/16");
                   AppValue lhs = clausen_3f2(R(1, 3), at(R(-108) * u / a.pow(3), ec), ec.ctx);
                   AppValue rhs = av_scale(f3f2(R(1, 3), R(108) * u * u / b.pow(3), ec),
                                           (a / b).to_real(ec.ctx.compute_bits()));
                   return Sides{lhs, rhs, {}, {}};
                 }});
  out.push_back({"AUX_3F2_2",
                 "3F2(1/4,1/2,3/4;1,1;256u^3/(9(3+u)^4)) = (3+u)/(3(1+3u)) 3F2(1/4,1/2,3/4;1,1;256u/(9(1+3u)^4))",
                 "|u| small", {"u"}, points("u", {"1/100", "-1/100", "1/50"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   const R u = rational_param(p, "u");
                   const R a = R(3) + u, b = R(1) + R(3) * u;
                   require(b.sign() > 0, "requires u > -1/3");
                   AppValue lhs = f3f2(R(1, 4), R(256) * u.pow(3) / (R(9) * a.pow(4)), ec);
                   AppValue rhs = av_scale(f3f2(R(1, 4), R(256) * u / (R(9) * b.pow(4)), ec),
                                           (a / (R(3) * b)).to_real(ec.ctx.compute_bits()));
                   return Sides{lhs, rhs, {}, {}};
                 }});

  for (long d : {3L, 4L}) {
    out.push_back({"CLAUSEN_" + std::to_string(d),
                   "3F2(1/" + std::to_string(d) + ",1/2," + std::to_string(d - 1) + "/" + std::to_string(d) +
                       ";1,1;4x(1-x)) = 2F1(1/" + std::to_string(d) + "," + std::to_string(d - 1) + "/" +
                       std::to_string(d) + ";1;x)^2",
                   "0 < x < 1/2", {"x"}, points("x", {"1/10", "1/4", "2/5"}), kTight, false, false,
                   [d](const ParamPoint& p, const EvalContext& ec) {
                     const R x = rational_param(p, "x");
                     require(x.sign() > 0 && x < R(1, 2), "requires 0 < x < 1/2");
                     const R a(1, d);
                     AppValue lhs = f3f2(a, R(4) * x * (R(1) - x), ec);
                     AppValue h = f2f1(a, x, ec);
                     return Sides{lhs, av_mul(h, h), {}, {}};
                   }});
  }

  out.push_back({"CUBIC_2F1",
                 "2F1(1/3,2/3;1;(1-p)(2+p)^2/4) = 2/(1+p) 2F1(1/3,2/3;1;(1-p)^2(2+p)/(2(1+p)^3))",
                 "p near 1", {"p"}, points("p", {"9/10", "19/20", "21/20"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   const R v = rational_param(p, "p");
                   require(v > R(0) && v < R(6, 5), "requires p near 1");
                   const R one_m = R(1) - v, one_p = R(1) + v, two_p = R(2) + v;
                   AppValue lhs = f2f1(R(1, 3), one_m * two_p * two_p / R(4), ec);
                   AppValue rhs = av_scale(f2f1(R(1, 3), one_m * one_m * two_p / (R(2) * one_p.pow(3)), ec),
                                           (R(2) / one_p).to_real(ec.ctx.compute_bits()));
                   return Sides{lhs, rhs, {}, {}};
                 }});
  out.push_back({"QUARTIC_2F1",
                 "2F1(1/4,3/4;1;1-64p/(3+6p-p^2)^2) = sqrt((3+6p-p^2)/(27-18p-p^2)) 2F1(1/4,3/4;1;1-64p^3/(27-18p-p^2)^2)",
                 "0 < p < 1", {"p"}, points("p", {"1/2", "9/10"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   const R v = rational_param(p, "p");
                   require(v > R(0) && v < R(1), "requires 0 < p < 1");
                   const R a = R(3) + R(6) * v - v * v, b = R(27) - R(18) * v - v * v;
                   AppValue lhs = f2f1(R(1, 4), R(1) - R(64) * v / (a * a), ec);
                   const Real factor = sqrt((a / b).to_real(ec.ctx.compute_bits()));
                   AppValue rhs = av_scale(f2f1(R(1, 4), R(1) - R(64) * v.pow(3) / (b * b), ec), factor);
                   return Sides{lhs, rhs, {}, {}};
                 }});

  out.push_back({"BESSEL_LAPLACE",
                 "Laplace transform of I0(2u)^3 at 3(x+1/x) against x/(3(1+3x^2)) 3F2(1/4,1/2,3/4;1,1;256x^2/(9(1+3x^2)^4))",
                 "0 < x < 1/3", {"x"}, points("x", {"1/10", "1/5"}), Tolerance{0, 1e-10L}, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   const R x = rational_param(p, "x");
                   require(x.sign() > 0, "requires x > 0");
                   CheckResult r = bessel_laplace_check(x.to_real(ec.ctx.compute_bits()), ec.ctx);
                   return Sides{r.lhs, r.rhs, {}, {}};
                 }});
}

}  // namespace

void register_hypergeometric(std::vector<IdentityCheck>& out) {
  add_five_f_four(out);
  add_three_f_two(out);
}

}  // namespace hyperforge::catalog_detail
