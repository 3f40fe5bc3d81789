#include <cmath>
#include <functional>
#include <string>

#include "catalog_internal.hpp"
#include "hyperforge/coefficient_cache.hpp"
#include "hyperforge/errors.hpp"
#include "hyperforge/hypergeometric.hpp"
#include "hyperforge/mahler.hpp"
#include "hyperforge/qseries.hpp"

namespace hyperforge::catalog_detail {

namespace {

using R = ExactRational;

constexpr Tolerance kTight{1e-30L, 0};
constexpr Tolerance kConjectural{0, 1e-3L};

ParamPoint point(const std::string& name, const std::string& value) { return ParamPoint{{name, value}}; }

std::vector<ParamPoint> points(const std::string& name, std::initializer_list<const char*> values) {
  std::vector<ParamPoint> out;
  for (const char* v : values) out.push_back(point(name, v));
  return out;
}

Complex exact_q(const ParamPoint& p, const EvalContext& ec) {
  return complex_param(p, "q", ec.ctx.compute_bits());
}

AppValue G(const Complex& q, const EvalContext& ec) { return eisenstein_G(q, ec.ctx); }

// sum_i c_i G(q^{k_i})
AppValue G_combination(const Complex& q, const std::vector<std::pair<R, long>>& terms,
                       const EvalContext& ec) {
  std::vector<std::pair<R, AppValue>> parts;
  for (const auto& [c, k] : terms) parts.emplace_back(c, G(pow(q, k), ec));
  return combine(parts, ec.ctx.compute_bits());
}

AppValue f_of_s(int j, const Complex& q, const EvalContext& ec) {
  return f_series(j, s_function(j, q, ec.ctx), ec.ctx);
}

// Adds the sensitivity of a value in q^k to a relative error in q.
AppValue widen_for_q(AppValue v, long double rel_q, long k) {
  v.err += 4 * static_cast<long double>(k) * magnitude(v.value) * rel_q;
  v.rigor = Rigor::heuristic;
  return v;
}

void add_bertin(std::vector<IdentityCheck>& out) {
  out.push_back({"BERTIN_G1", "g1 at t1(q) as a combination of G(q^d), d | 6",
                 "0 < q < e^-pi", {"q"}, points("q", {"1/50", "1/100"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   Complex q = exact_q(p, ec);
                   AppValue lhs = g_series(1, t_function(1, q, ec.ctx), ec.ctx);
                   AppValue rhs = G_combination(
                       q, {{R(-1, 60), 1}, {R(1, 30), 2}, {R(-1, 20), 3}, {R(1, 10), 6}}, ec);
                   return Sides{lhs, rhs, {}, {}};
                 }});
  out.push_back({"BERTIN_G2", "g2 at t2(q) as a combination of G(q^d), d | 6",
                 "|t2(q)| > 16", {"q"}, points("q", {"1/50", "1/100"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   Complex q = exact_q(p, ec);
                   AppValue lhs = g_series(2, t_function(2, q, ec.ctx), ec.ctx);
                   AppValue rhs = G_combination(
                       q, {{R(1, 120), 1}, {R(-1, 15), 2}, {R(-1, 40), 3}, {R(1, 5), 6}}, ec);
                   return Sides{lhs, rhs, {}, {}};
                 }});
}

void add_f_in_terms_of_G(std::vector<IdentityCheck>& out) {
  out.push_back({"F2_G", "f2(s2(q)) in terms of G(q), G(-q), G(q^2)", "0 < q < e^-pi", {"q"},
                 points("q", {"1/50", "1/100"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   Complex q = exact_q(p, ec);
                   AppValue lhs = f_of_s(2, q, ec);
                   AppValue rhs = combine({{R(-2, 15), G(q, ec)}, {R(-1, 15), G(-q, ec)},
                                           {R(3, 5), G(pow(q, 2), ec)}},
                                          ec.ctx.compute_bits());
                   return Sides{lhs, rhs, {}, {}};
                 }});
  out.push_back({"F3_G", "f3(s3(q)) in terms of G(q), G(q^3)", "0 < q < 0.0266", {"q"},
                 points("q", {"1/50", "1/100"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   Complex q = exact_q(p, ec);
                   return Sides{f_of_s(3, q, ec), G_combination(q, {{R(-1, 8), 1}, {R(3, 8), 3}}, ec), {}, {}};
                 }});
  out.push_back({"F4_G", "f4(s4(q)) in terms of G(q), G(q^2)", "0 < q < e^-(pi sqrt 2)", {"q"},
                 points("q", {"1/100", "1/200"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   Complex q = exact_q(p, ec);
                   return Sides{f_of_s(4, q, ec), G_combination(q, {{R(-1, 3), 1}, {R(2, 3), 2}}, ec), {}, {}};
                 }});

  out.push_back({"GINV_F2", "G(q) in terms of f2 at s2(q), s2(-q), s2(q^2), s2(-q^2)", "0 < q < e^-pi",
                 {"q"}, points("q", {"1/50", "1/100"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   Complex q = exact_q(p, ec);
                   Complex q2 = pow(q, 2);
                   AppValue rhs = combine({{R(-19), f_of_s(2, q, ec)},
                                           {R(-4), f_of_s(2, -q, ec)},
                                           {R(24), f_of_s(2, q2, ec)},
                                           {R(-12), f_of_s(2, -q2, ec)}},
                                          ec.ctx.compute_bits());
                   return Sides{G(q, ec), rhs, {}, {}};
                 }});
  out.push_back({"GINV_F3", "G(q) in terms of f3 at s3 of q, rotated q and q^3", "0 < q < 0.0266",
                 {"q"}, points("q", {"1/50", "1/100"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   const Bits prec = ec.ctx.compute_bits();
                   Complex q = exact_q(p, ec);
                   AppValue rhs = combine({{R(-19, 2), f_of_s(3, q, ec)},
                                           {R(-3, 2), f_of_s(3, root_of_unity(1, 3, prec) * q, ec)},
                                           {R(-3, 2), f_of_s(3, root_of_unity(2, 3, prec) * q, ec)},
                                           {R(9, 2), f_of_s(3, pow(q, 3), ec)}},
                                          prec);
                   return Sides{G(q, ec), rhs, {}, {}};
                 }});
  out.push_back({"GINV_F4", "G(q) in terms of f4 at s4(q), s4(-q), s4(q^2)", "0 < q < e^-(pi sqrt 2)",
                 {"q"}, points("q", {"1/100", "1/200"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   Complex q = exact_q(p, ec);
                   AppValue rhs = combine({{R(-5), f_of_s(4, q, ec)},
                                           {R(-2), f_of_s(4, -q, ec)},
                                           {R(4), f_of_s(4, pow(q, 2), ec)}},
                                          ec.ctx.compute_bits());
                   return Sides{G(q, ec), rhs, {}, {}};
                 }});

  for (int prime : {2, 3}) {
    out.push_back({"GFUNC_P" + std::to_string(prime),
                   "sum of G over the rotations of q against G(q^p) and G(q^(p^2))", "0 < |q| < 1",
                   {"q"}, points("q", {"1/20", "1/50", "1/25+1/50i"}), kTight, false, false,
                   [prime](const ParamPoint& p, const EvalContext& ec) {
                     const Bits prec = ec.ctx.compute_bits();
                     Complex q = exact_q(p, ec);
                     std::vector<std::pair<R, AppValue>> rotations;
                     for (int j = 0; j < prime; ++j) rotations.emplace_back(R(1), G(root_of_unity(j, prime, prec) * q, ec));
                     const long p2 = prime * prime;
                     AppValue rhs = G_combination(q, {{R(1 + prime * p2), prime}, {R(-p2), p2}}, ec);
                     return Sides{combine(rotations, prec), rhs, {}, {}};
                   }});
  }
}

enum class LemmaKind { s, t1_squared, t2 };

struct LemmaFormula {
  std::string suffix;
  LemmaKind kind;
  int j;       // signature for s_j
  int sign;    // +q or -q
  long power;  // q^power
  std::function<R(const R&)> rational;
};

std::vector<LemmaFormula> lemma_formulas() {
  auto P = [](const R& p, std::initializer_list<long> coeffs) {
    R acc(0);
    R x(1);
    for (long c : coeffs) {
      acc += R(c) * x;
      x *= p;
    }
    return acc;
  };
  // Linear factors 1-p, 1+p, 2+p, 1+2p.
  auto l1m = [](const R& p) { return R(1) - p; };
  auto l1p = [](const R& p) { return R(1) + p; };
  auto l2p = [](const R& p) { return R(2) + p; };
  auto l12 = [](const R& p) { return R(1) + R(2) * p; };
  auto sq = [](const R& p) { return R(1) - p * p; };
  return {
      {"s2_q", LemmaKind::s, 2, 1, 1,
       [=](const R& p) {
         return R(16) * l12(p).pow(6) / (p * l1m(p).pow(3) * l1p(p) * l2p(p).pow(3));
       }},
      {"s2_q3", LemmaKind::s, 2, 1, 3,
       [=](const R& p) {
         return R(16) * l12(p).pow(2) / (p.pow(3) * l1m(p) * l1p(p).pow(3) * l2p(p));
       }},
      {"s2_mq", LemmaKind::s, 2, -1, 1,
       [=](const R& p) {
         return -R(16) * l1m(p).pow(6) * l1p(p).pow(2) / (p * l2p(p).pow(3) * l12(p).pow(3));
       }},
      {"s2_mq3", LemmaKind::s, 2, -1, 3,
       [=](const R& p) {
         return -R(16) * l1m(p).pow(2) * l1p(p).pow(6) / (p.pow(3) * l2p(p) * l12(p));
       }},
      {"s2_mq2", LemmaKind::s, 2, -1, 2,
       [=](const R& p) {
         return R(256) * l1m(p).pow(3) * l1p(p) * l12(p).pow(3) / (p.pow(2) * l2p(p).pow(6));
       }},
      {"s2_mq6", LemmaKind::s, 2, -1, 6,
       [=](const R& p) {
         return R(256) * l1m(p) * l1p(p).pow(3) * l12(p) / (p.pow(6) * l2p(p).pow(2));
       }},
      {"s3_q", LemmaKind::s, 3, 1, 1,
       [=](const R& p) {
         return R(4) * P(p, {1, 4, 1}).pow(6) / (p * sq(p).pow(4) * l2p(p) * l12(p));
       }},
      {"s3_q2", LemmaKind::s, 3, 1, 2,
       [=](const R& p) {
         return R(16) * P(p, {1, 1, 1}).pow(6) /
                (p.pow(2) * sq(p).pow(2) * l2p(p).pow(2) * l12(p).pow(2));
       }},
      {"s3_mq", LemmaKind::s, 3, -1, 1,
       [=](const R& p) {
         return -R(4) * P(p, {1, -2, -2}).pow(6) / (p * sq(p) * l2p(p) * l12(p).pow(4));
       }},
      {"s3_q4", LemmaKind::s, 3, 1, 4,
       [=](const R& p) {
         return R(4) * P(p, {2, 2, -1}).pow(6) / (p.pow(4) * sq(p) * l2p(p).pow(4) * l12(p));
       }},
      {"s4_q", LemmaKind::s, 4, 1, 1,
       [=](const R& p) {
         return R(16) * P(p, {1, 14, 24, 14, 1}).pow(4) /
                (p * l1m(p).pow(6) * l1p(p).pow(2) * l2p(p).pow(3) * l12(p).pow(3));
       }},
      {"s4_q3", LemmaKind::s, 4, 1, 3,
       [=](const R& p) {
         return R(16) * P(p, {1, 2, 0, 2, 1}).pow(4) /
                (p.pow(3) * l1m(p).pow(2) * l1p(p).pow(6) * l2p(p) * l12(p));
       }},
      {"s4_mq", LemmaKind::s, 4, -1, 1,
       [=](const R& p) {
         return -R(16) * P(p, {1, -10, -12, -4, -2}).pow(4) /
                (p * l1m(p).pow(3) * l1p(p) * l12(p).pow(6) * l2p(p).pow(3));
       }},
      {"s4_mq3", LemmaKind::s, 4, -1, 3,
       [=](const R& p) {
         return -R(16) * P(p, {1, 2, 0, -4, -2}).pow(4) /
                (p.pow(3) * l1m(p) * l1p(p).pow(3) * l12(p).pow(2) * l2p(p));
       }},
      {"t1sq_q", LemmaKind::t1_squared, 0, 1, 1,
       [=](const R& p) {
         return R(4) * P(p, {1, 1, 1}).pow(2) * P(p, {1, 4, 1}).pow(2) /
                (p * sq(p).pow(2) * l2p(p) * l12(p));
       }},
      {"t1sq_mq", LemmaKind::t1_squared, 0, -1, 1,
       [=](const R& p) {
         return -R(4) * P(p, {1, 1, 1}).pow(2) * P(p, {1, -2, -2}).pow(2) /
                (p * sq(p) * l2p(p) * l12(p).pow(2));
       }},
      {"t2_q", LemmaKind::t2, 0, 1, 1,
       [=](const R& p) { return -R(4) * sq(p).pow(2) / (p * l2p(p) * l12(p)); }},
      {"t2_mq", LemmaKind::t2, 0, -1, 1,
       [=](const R& p) { return -R(4) * P(p, {1, 1, 1}).pow(2) / (p * sq(p) * l2p(p)); }},
  };
}

// q = q_2(alpha) with alpha = p (2+p)^3 / (1+2p)^3.
AppValue lemma_nome(const R& p, const EvalContext& ec) {
  if (p.sign() <= 0) throw DomainError("p must be positive");
  const R alpha = p * (R(2) + p).pow(3) / (R(1) + R(2) * p).pow(3);
  if (alpha >= R(1)) throw DomainError("alpha(p) must lie in (0, 1)");
  return nome(2, alpha.to_real(ec.ctx.compute_bits()), ec.ctx);
}

AppValue lemma_side(const LemmaFormula& f, const AppValue& qv, const EvalContext& ec, QPowerBranch branch) {
  Complex arg = pow(qv.value, f.power);
  if (f.sign < 0) arg = -arg;
  const long double rel_q = qv.err / magnitude(qv.value);
  switch (f.kind) {
    case LemmaKind::s:
      return widen_for_q(s_function(f.j, arg, ec.ctx, branch), rel_q, f.power);
    case LemmaKind::t1_squared: {
      AppValue t = t_function(1, arg, ec.ctx, branch);
      return widen_for_q(av_mul(t, t), rel_q, 2);
    }
    case LemmaKind::t2:
      return widen_for_q(t_function(2, arg, ec.ctx, branch), rel_q, 1);
  }
  throw DomainError("unknown lemma formula");
}

void add_lemma(std::vector<IdentityCheck>& out) {
  for (const LemmaFormula& f : lemma_formulas()) {
    out.push_back({"LEMMA23_" + f.suffix,
                   "rational parameterization of " + f.suffix + " at q = q2(p(2+p)^3/(1+2p)^3)",
                   "small p > 0", {"p"}, points("p", {"1/100", "1/50", "1/10"}), kTight, false, false,
                   [f](const ParamPoint& p, const EvalContext& ec) {
                     const R pv = rational_param(p, "p");
                     AppValue q = lemma_nome(pv, ec);
                     AppValue rhs = constant(f.rational(pv), ec.ctx.compute_bits());
                     Sides sides{lemma_side(f, q, ec, QPowerBranch::principal), rhs, {}, {}};
                     sides.modulus_branch.emplace(lemma_side(f, q, ec, QPowerBranch::modulus), rhs);
                     return sides;
                   }});
  }
  LemmaFormula perturbed = lemma_formulas().front();
  out.push_back({"LEMMA23_s2_q_PERTURBED", "control: s2(q) parameterization with 16 replaced by 17",
                 "small p > 0", {"p"}, points("p", {"1/100", "1/50", "1/10"}), kTight, false, true,
                 [perturbed](const ParamPoint& p, const EvalContext& ec) {
                   const R pv = rational_param(p, "p");
                   AppValue q = lemma_nome(pv, ec);
                   const R value = perturbed.rational(pv) * R(17, 16);
                   AppValue rhs = constant(value, ec.ctx.compute_bits());
                   Sides sides{lemma_side(perturbed, q, ec, QPowerBranch::principal), rhs, {}, {}};
                   sides.modulus_branch.emplace(lemma_side(perturbed, q, ec, QPowerBranch::modulus), rhs);
                   return sides;
                 }});

  out.push_back({"RESULTANT_REL", "s4^2 + (12+t1^2)^4 = s4 (-288 + 352 t1^2 - 42 t1^4 + t1^6) on the q-series",
                 "small p > 0", {"p"}, points("p", {"1/100", "1/50", "1/10"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   const Bits prec = ec.ctx.compute_bits();
                   AppValue q = lemma_nome(rational_param(p, "p"), ec);
                   const long double rel_q = q.err / magnitude(q.value);
                   AppValue s4 = widen_for_q(s_function(4, q.value, ec.ctx), rel_q, 1);
                   AppValue t = widen_for_q(t_function(1, q.value, ec.ctx), rel_q, 1);
                   AppValue t2 = av_mul(t, t);
                   AppValue t4 = av_mul(t2, t2);
                   AppValue t6 = av_mul(t4, t2);
                   AppValue lhs = av_add(av_mul(s4, s4), av_pow(av_add(t2, constant(R(12), prec)), 4));
                   AppValue poly = combine({{R(-288), constant(R(1), prec)}, {R(352), t2}, {R(-42), t4}, {R(1), t6}}, prec);
                   return Sides{lhs, av_mul(s4, poly), {}, {}};
                 }});
}

AppValue f_at(int j, const R& u, const EvalContext& ec) {
  return f_series(j, Complex(u.to_real(ec.ctx.compute_bits())), ec.ctx);
}

AppValue g_at(int j, const R& u, const EvalContext& ec) {
  return g_series(j, Complex(u.to_real(ec.ctx.compute_bits())), ec.ctx);
}

void add_rational_transformations(std::vector<IdentityCheck>& out) {
  out.push_back({"THM24_G1", "g1(3(z+1/z)) as f4 at 9(3+z^2)^4/z^6 and 9(3+z^-2)^4 z^6",
                 "|z| large", {"z"}, points("z", {"20", "50"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   const R z = rational_param(p, "z");
                   if (z.sign() == 0) throw DomainError("z must be nonzero");
                   const R zi = R(1) / z;
                   AppValue lhs = g_at(1, R(3) * (z + zi), ec);
                   AppValue rhs = combine({{R(1, 20), f_at(4, R(9) * (R(3) + z * z).pow(4) / z.pow(6), ec)},
                                           {R(3, 20), f_at(4, R(9) * (R(3) + zi * zi).pow(4) * z.pow(6), ec)}},
                                          ec.ctx.compute_bits());
                   return Sides{lhs, rhs, {}, {}};
                 }});
  out.push_back({"THM24_G2", "g2(z) as f3 at (16-z)^3/z^2 and -(4-z)^3/z", "|z| large", {"z"},
                 points("z", {"40", "100"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   const R z = rational_param(p, "z");
                   if (z.sign() == 0) throw DomainError("z must be nonzero");
                   AppValue lhs = g_at(2, z, ec);
                   AppValue rhs = combine({{R(-1, 15), f_at(3, (R(16) - z).pow(3) / (z * z), ec)},
                                           {R(8, 15), f_at(3, -(R(4) - z).pow(3) / z, ec)}},
                                          ec.ctx.compute_bits());
                   return Sides{lhs, rhs, {}, {}};
                 }});
  out.push_back({"INTRO_G1F4",
                 "g1(3(u^2+u^-2)) as Mahler measures of x^4+y^4+z^4+1+c xyz, c = sqrt3 (3+u^4)/u^3 and its u -> 1/u image",
                 "real |u| large", {"u"}, points("u", {"3", "5"}), kTight, false, false,
                 [](const ParamPoint& p, const EvalContext& ec) {
                   const R u = rational_param(p, "u");
                   if (u.sign() == 0) throw DomainError("u must be nonzero");
                   const R u2 = u * u, ui2 = R(1) / u2;
                   AppValue lhs = g_at(1, R(3) * (u2 + ui2), ec);
                   // m(x^4+y^4+z^4+1+c xyz) = f4(c^4) / 4
                   const R c1 = R(9) * (R(3) + u2 * u2).pow(4) / u.pow(12);
                   const R c2 = R(9) * (R(3) + ui2 * ui2).pow(4) * u.pow(12);
                   AppValue rhs = combine({{R(1, 20), f_at(4, c1, ec)}, {R(3, 20), f_at(4, c2, ec)}},
                                          ec.ctx.compute_bits());
                   return Sides{lhs, rhs, {}, {}};
                 }});
}

std::string smoothed_note(const CoefficientSeries& cs, const NamedForm& form, const AppValue& direct,
                          const EvalContext& ec) {
  if (smoothed_terms_needed(form.level, ec.ctx) > cs.size()) return {};
  AppValue sm = lvalue_smoothed(cs, 3, form.level, form.weight, form.sign, ec.ctx);
  return "L(" + form.name + ",3) direct " + direct.real().to_string(20) + " +- " +
         Real(direct.err, 64).to_string(3) + ", smoothed " + sm.real().to_string(20);
}

void add_l_values(std::vector<IdentityCheck>& out) {
  const Tolerance cor{0, 5e-5L};
  out.push_back({"COR25_A", "5F4(4/3,3/2,5/3,1,1;2,2,2,2;1) = 18 log 2 + 27 log 3 - 810 sqrt3 / pi^3 L(g,3)",
                 "g = eta(2z)^3 eta(6z)^3", {}, {}, cor, false, false,
                 [](const ParamPoint&, const EvalContext& ec) {
                   const Bits prec = ec.ctx.compute_bits();
                   const std::vector<R> upper{R(4, 3), R(3, 2), R(5, 3), R(1), R(1)};
                   const std::vector<R> lower{R(2), R(2), R(2), R(2)};
                   AppValue lhs = pfq_unit(upper, lower, ec.ctx);
                   const NamedForm& form = named_form("g12");
                   auto cs = form_series("g12", ec);
                   AppValue L = lvalue_direct(*cs, 3, ec.ctx, TailMode::rigorous, ec.options.threads);
                   const Real pi = const_pi(prec);
                   Real c = Real(810L, prec) * sqrt(Real(3L, prec)) / pow(pi, 3);
                   Real base = 18L * const_log2(prec) + 27L * log(Real(3L, prec));
                   AppValue rhs = av_sub(constant(base), av_scale(L, c));
                   return Sides{lhs, rhs, smoothed_note(*cs, form, L, ec), {}};
                 }});
  out.push_back({"COR25_B", "5F4(5/4,3/2,7/4,1,1;2,2,2,2;1) = 256/3 log 2 - 5120 sqrt2 / (3 pi^3) L(f,3)",
                 "f = eta(z)^2 eta(2z) eta(4z) eta(8z)^2", {}, {}, cor, false, false,
                 [](const ParamPoint&, const EvalContext& ec) {
                   const Bits prec = ec.ctx.compute_bits();
                   const std::vector<R> upper{R(5, 4), R(3, 2), R(7, 4), R(1), R(1)};
                   const std::vector<R> lower{R(2), R(2), R(2), R(2)};
                   AppValue lhs = pfq_unit(upper, lower, ec.ctx);
                   const NamedForm& form = named_form("f8");
                   auto cs = form_series("f8", ec);
                   AppValue L = lvalue_direct(*cs, 3, ec.ctx, TailMode::rigorous, ec.options.threads);
                   const Real pi = const_pi(prec);
                   Real c = Real(5120L, prec) * sqrt(Real(2L, prec)) / (3L * pow(pi, 3));
                   Real base = Real(256L, prec) * const_log2(prec) / 3L;
                   AppValue rhs = av_sub(constant(base), av_scale(L, c));
                   return Sides{lhs, rhs, smoothed_note(*cs, form, L, ec), {}};
                 }});
  out.push_back({"BOYD_KO", "3F2(1/2,1/2,1/2;3/2,1;1/16) against 15/pi^2 L(f15,2)",
                 "f15 = eta(z) eta(3z) eta(5z) eta(15z)", {}, {}, kConjectural, true, false,
                 [](const ParamPoint&, const EvalContext& ec) {
                   const Bits prec = ec.ctx.compute_bits();
                   AppValue lhs = hyp3f2(R(1, 2), R(1, 2), R(1, 2), R(3, 2), R(1),
                                         Complex(Real(1L, prec) / 16L), ec.ctx);
                   auto cs = form_series("f15", ec);
                   AppValue L = lvalue_direct(*cs, 2, ec.ctx, TailMode::heuristic, ec.options.threads);
                   const Real pi = const_pi(prec);
                   AppValue rhs = av_scale(L, Real(15L, prec) / (pi * pi));
                   return Sides{lhs, rhs, "heuristic L tail", {}};
                 }});
  out.push_back({"BOYD_MAHLER", "m(1+x+1/x+y+1/y) against 15/(4 pi^2) L(f15,2)",
                 "f15 = eta(z) eta(3z) eta(5z) eta(15z)", {}, {}, kConjectural, true, false,
                 [](const ParamPoint&, const EvalContext& ec) {
                   const Bits prec = ec.ctx.compute_bits();
                   AppValue lhs = mahler_two_variable(Real(1L, prec), ec.ctx);
                   auto cs = form_series("f15", ec);
                   AppValue L = lvalue_direct(*cs, 2, ec.ctx, TailMode::heuristic, ec.options.threads);
                   const Real pi = const_pi(prec);
                   AppValue rhs = av_scale(L, Real(15L, prec) / (4L * pi * pi));
                   return Sides{lhs, rhs, "heuristic L tail", {}};
                 }});
}

}  // namespace

void register_modular(std::vector<IdentityCheck>& out) {
  add_bertin(out);
  add_f_in_terms_of_G(out);
  add_lemma(out);
  add_rational_transformations(out);
  add_l_values(out);
}

}  // namespace hyperforge::catalog_detail
