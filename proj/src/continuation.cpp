#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperforge/errors.hpp"
#include "hyperforge/hypergeometric.hpp"
#include "hyperforge/quadrature.hpp"

namespace hyperforge {

namespace {

bool on_cut(const Complex& t) { return t.im.is_zero() && t.re >= 1L; }

long double mag(const Complex& z) { return abs(z).to_ld(); }

// Distance from t to the cut [1, inf).
long double cut_distance(const Complex& t) {
  const long double re = t.re.to_ld(), im = t.im.to_ld();
  if (re >= 1) return std::fabs(im);
  return std::hypot(re - 1, im);
}

ExactRational log_series_leading(const ExactRational& alpha) {
  return alpha * ExactRational(1, 2) * (ExactRational(1) - alpha);
}

AppValue log_series_direct(const ExactRational& alpha, const Complex& X, const PrecisionContext& ctx) {
  const Bits prec = ctx.compute_bits();
  HypergeometricSpec spec({ExactRational(1) + alpha, ExactRational(3, 2), ExactRational(2) - alpha,
                           ExactRational(1), ExactRational(1)},
                          {ExactRational(2), ExactRational(2), ExactRational(2), ExactRational(2)}, X);
  AppValue f = pfq(spec, ctx);
  Complex scale = X.rounded(prec) * log_series_leading(alpha).to_real(prec);
  const long double s = mag(scale);
  return AppValue(f.value * scale, f.err * s + rounding_bound(mag(f.value) * s, prec, 4), f.rigor);
}

}  // namespace

AppValue clausen_3f2(const ExactRational& alpha, const Complex& t_in, const PrecisionContext& ctx) {
  const Bits prec = ctx.compute_bits();
  const Complex t = t_in.rounded(prec);
  if (on_cut(t)) throw DomainError("3F2 evaluated on its branch cut [1, inf)");
  const ExactRational half(1, 2);
  const long double at = mag(t);
  if (at <= 0.5L) {
    return hyp3f2(alpha, half, ExactRational(1) - alpha, 1, 1, t, ctx);
  }
  const ExactRational a = alpha / 2;
  const ExactRational b = (ExactRational(1) - alpha) / 2;
  const Complex one_minus_t = Real(1L, prec) - t;
  const Complex z = t / one_minus_t * Real(-1L, prec);
  const long double az = mag(z);

  const long double a1 = mag(one_minus_t);

  // 1/(1-t) needs a - b = alpha - 1/2 outside the integers.
  const bool inverse_ok = !(a - b).is_integer();
  const long double ainv = inverse_ok ? 1.0L / a1 : std::numeric_limits<long double>::infinity();

  AppValue h;
  if (std::min({at, az, a1, ainv}) >= 0.95L) {
    throw DomainError("3F2 argument too close to |t| = |1 - t| = 1 for the available transformations");
  }
  if (ainv < std::min({at, az, a1})) {
    const Complex w = Complex(Real(1L, prec)) / one_minus_t;
    AppValue u1 = hyp2f1(a, ExactRational(1) - b, a - b + ExactRational(1), w, ctx);
    AppValue u2 = hyp2f1(b, ExactRational(1) - a, b - a + ExactRational(1), w, ctx);
    const Real ar = a.to_real(prec), br = b.to_real(prec);
    const Real A = gamma(br - ar) / (gamma(br) * gamma(1L - ar));
    const Real B = gamma(ar - br) / (gamma(ar) * gamma(1L - br));
    const Complex pa = pow(one_minus_t, -ar), pb = pow(one_minus_t, -br);
    const long double ma = mag(pa) * std::fabs(A.to_ld()), mb = mag(pb) * std::fabs(B.to_ld());
    Complex v = u1.value * pa * A + u2.value * pb * B;
    const long double e = u1.err * ma + u2.err * mb +
                          rounding_bound(mag(u1.value) * ma + mag(u2.value) * mb, prec, 64);
    h = AppValue(v, e, weakest(u1.rigor, u2.rigor));
  } else if (at <= az && at <= a1) {
    h = hyp2f1(a, b, 1, t, ctx);
  } else if (az <= a1) {
    AppValue g = hyp2f1(a, ExactRational(1) - b, 1, z, ctx);
    Complex factor = pow(one_minus_t, -a.to_real(prec));
    const long double fm = mag(factor);
    Complex v = g.value * factor;
    h = AppValue(v, g.err * fm + rounding_bound(mag(v), prec, 64), g.rigor);
  } else {
    // Connection to 1 - t; here c - a - b = 1/2.
    AppValue u1 = hyp2f1(a, b, half, one_minus_t, ctx);
    AppValue u2 = hyp2f1(ExactRational(1) - a, ExactRational(1) - b, ExactRational(3, 2), one_minus_t, ctx);
    const Real ar = a.to_real(prec), br = b.to_real(prec);
    const Real A = gamma(Real(0.5, prec)) / (gamma(1L - ar) * gamma(1L - br));
    const Real B = gamma(Real(-0.5, prec)) / (gamma(ar) * gamma(br));
    const Complex root = sqrt(one_minus_t);
    Complex v = u1.value * A + u2.value * root * B;
    const long double e = u1.err * std::fabs(A.to_ld()) + u2.err * mag(root) * std::fabs(B.to_ld()) +
                          rounding_bound(mag(u1.value) * std::fabs(A.to_ld()) +
                                             mag(u2.value) * mag(root) * std::fabs(B.to_ld()),
                                         prec, 64);
    h = AppValue(v, e, weakest(u1.rigor, u2.rigor));
  }
  Complex sq = h.value * h.value;
  const long double hm = mag(h.value);
  return AppValue(sq, 2 * hm * h.err + h.err * h.err + rounding_bound(mag(sq), prec, 4), h.rigor);
}

AppValue mahler_log_series(const ExactRational& alpha, const Complex& X_in, const PrecisionContext& ctx) {
  const Bits prec = ctx.compute_bits();
  const Complex X = X_in.rounded(prec);
  if (on_cut(X)) throw DomainError("log series evaluated on its branch cut [1, inf)");
  const long double R = mag(X);
  if (R <= 0.5L) return log_series_direct(alpha, X, ctx);

  // Phi(X) = Phi(X0) + int_{1/2}^{|X|} (F(r e^{i theta}) - 1) / r dr.
  const Real radius = abs(X);
  const Complex dir = X / radius;
  const Real half(0.5, prec);
  AppValue start = log_series_direct(alpha, dir * half, ctx);

  const unsigned nodes = static_cast<unsigned>(std::ceil((prec + 10) * 0.393)) + 2;
  const GaussRule& rule = cached_gauss_legendre(nodes, prec);

  Complex total = start.value;
  long double err = start.err;
  Rigor rigor = Rigor::heuristic;
  Real r0 = half;
  const Real one(1L, prec);
  int panels = 0;
  while (r0 < radius) {
    const long double d = cut_distance(dir * r0);
    Real r1 = r0 + Real(0.5L * d, prec);
    if (r1 > radius) r1 = radius;
    const Real mid = (r0 + r1) / 2;
    const Real halfwidth = (r1 - r0) / 2;
    Complex panel(prec);
    long double panel_err = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const Real r = mid + halfwidth * rule.nodes[i];
      AppValue F = clausen_3f2(alpha, dir * r, ctx);
      const Real w = halfwidth * rule.weights[i] / r;
      panel += (F.value - one) * w;
      panel_err += F.err * w.to_ld();
    }
    total += panel;
    err += panel_err + rounding_bound(mag(panel), prec, 8.0L * nodes) +
           mag(panel) * std::ldexp(1.0L, -static_cast<int>(prec));
    r0 = r1;
    if (++panels > 10000) throw NonConvergent("continuation path needs too many panels");
  }
  return AppValue(total, err, rigor);
}

AppValue mahler_5f4(const ExactRational& alpha, const Complex& X_in, const PrecisionContext& ctx) {
  const Bits prec = ctx.compute_bits();
  const Complex X = X_in.rounded(prec);
  if (on_cut(X)) throw DomainError("5F4 evaluated on its branch cut [1, inf)");
  if (mag(X) < 1.0L) {
    HypergeometricSpec spec({ExactRational(1) + alpha, ExactRational(3, 2), ExactRational(2) - alpha,
                             ExactRational(1), ExactRational(1)},
                            {ExactRational(2), ExactRational(2), ExactRational(2), ExactRational(2)}, X);
    return pfq(spec, ctx);
  }
  AppValue phi = mahler_log_series(alpha, X, ctx);
  Complex scale = X * log_series_leading(alpha).to_real(prec);
  const long double s = mag(scale);
  Complex v = phi.value / scale;
  return AppValue(v, phi.err / s + rounding_bound(mag(v), prec, 4), phi.rigor);
}

}  // namespace hyperforge
