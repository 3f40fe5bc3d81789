#include "hyperforge/interval.hpp"

#include <cmath>
#include <limits>

namespace hyperforge {

long double magnitude(const Complex& z) {
  if (z.im.is_zero()) return std::fabs(z.re.to_ld());
  return std::hypot(z.re.to_ld(), z.im.to_ld());
}

namespace {

Bits prec_of(const AppValue& a) { return a.value.precision(); }

}  // namespace

AppValue av_add(const AppValue& a, const AppValue& b) {
  Complex v = a.value + b.value;
  const long double r = rounding_bound(magnitude(v), v.precision(), 2);
  return AppValue(std::move(v), a.err + b.err + r, weakest(a.rigor, b.rigor));
}

AppValue av_sub(const AppValue& a, const AppValue& b) {
  Complex v = a.value - b.value;
  const long double r = rounding_bound(magnitude(v), v.precision(), 2);
  return AppValue(std::move(v), a.err + b.err + r, weakest(a.rigor, b.rigor));
}

AppValue av_mul(const AppValue& a, const AppValue& b) {
  Complex v = a.value * b.value;
  const long double ma = magnitude(a.value), mb = magnitude(b.value);
  const long double e = a.err * mb + b.err * ma + a.err * b.err +
                        rounding_bound(magnitude(v), v.precision(), 4);
  return AppValue(std::move(v), e, weakest(a.rigor, b.rigor));
}

AppValue av_div(const AppValue& a, const AppValue& b) {
  const long double mb = magnitude(b.value);
  if (!(b.err < mb)) {
    return AppValue(a.value / b.value, std::numeric_limits<long double>::infinity(), Rigor::heuristic);
  }
  Complex v = a.value / b.value;
  // |a/b - (a+da)/(b+db)| <= (|da| + |a/b| |db|) / (|b| - |db|)
  const long double mv = magnitude(v);
  const long double e = (a.err + mv * b.err) / (mb - b.err) + rounding_bound(mv, v.precision(), 8);
  return AppValue(std::move(v), e, weakest(a.rigor, b.rigor));
}

AppValue av_scale(const AppValue& a, const Complex& c) {
  Complex v = a.value * c;
  const long double e = a.err * magnitude(c) + rounding_bound(magnitude(v), v.precision(), 4);
  return AppValue(std::move(v), e, a.rigor);
}

AppValue av_scale(const AppValue& a, const Real& c) { return av_scale(a, Complex(c)); }

AppValue av_pow(const AppValue& a, long n) {
  Complex v = pow(a.value, n);
  const long double m = magnitude(a.value);
  const long double k = std::fabs(static_cast<long double>(n));
  long double rel = m > 0 ? a.err / m : 0;
  if (n < 0 && !(rel < 1)) {
    return AppValue(std::move(v), std::numeric_limits<long double>::infinity(), Rigor::heuristic);
  }
  // |(1+e)^n - 1| for |e| <= rel; for n < 0 use (1-rel)^-k - 1.
  long double rel_out = n >= 0 ? std::expm1(k * std::log1p(rel)) : std::expm1(-k * std::log1p(-rel));
  const long double mv = magnitude(v);
  return AppValue(std::move(v), mv * rel_out + rounding_bound(mv, prec_of(a), 2 * k + 4), a.rigor);
}

AppValue av_neg(const AppValue& a) { return AppValue(-a.value, a.err, a.rigor); }

AppValue av_exact(const Complex& v) {
  return AppValue(v, rounding_bound(magnitude(v), v.precision(), 1));
}

AppValue av_exact(const Real& v) { return av_exact(Complex(v)); }

AppValue av_re(const AppValue& a) {
  return AppValue(Complex(a.value.re), a.err, a.rigor);
}

}  // namespace hyperforge
