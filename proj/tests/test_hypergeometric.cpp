#include <cmath>

#include "doctest.h"
#include "hyperforge/errors.hpp"
#include "hyperforge/hypergeometric.hpp"

using namespace hyperforge;

namespace {

const ExactRational kHalf(1, 2);

Complex cplx(double re, double im, Bits prec) { return Complex(Real(re, prec), Real(im, prec)); }

long double dist(const Complex& a, const Complex& b) { return abs(a - b).to_ld(); }

// 1 / AGM(1, sqrt(1 - x)) = 2F1(1/2, 1/2; 1; x)
Real agm_oracle(const Real& x) {
  Real a(1L, x.precision());
  Real b = sqrt(1L - x);
  for (int i = 0; i < 64; ++i) {
    Real an = (a + b) / 2;
    b = sqrt(a * b);
    a = an;
  }
  return 1L / a;
}

}  // namespace

TEST_CASE("2F1(1,1;2;x) equals -log(1-x)/x") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  for (double xv : {0.3, -0.45, 0.9}) {
    Real x(xv, prec);
    AppValue v = hyp2f1(1, 1, 2, Complex(x), ctx);
    Real exact = -log1p(-x) / x;
    CHECK(abs(v.real() - exact).to_ld() <= v.err);
    CHECK(v.err < 1e-36L);
    CHECK((v.rigor == Rigor::rigorous) == (std::fabs(xv) <= 0.5));
  }
  Complex z = cplx(0.3, 0.3, prec);
  AppValue v = hyp2f1(1, 1, 2, z, ctx);
  Complex exact = -log(Real(1L, prec) - z) / z;
  CHECK(v.rigor == Rigor::rigorous);
  CHECK(dist(v.value, exact) <= v.err);
}

TEST_CASE("2F1(1/2,1/2;1;x) matches the arithmetic-geometric mean") {
  PrecisionContext ctx(192);
  const Bits prec = ctx.compute_bits();
  for (double xv : {0.1, 0.5, 0.8, -0.7}) {
    Real x(xv, prec);
    AppValue v = hyp2f1(kHalf, kHalf, 1, Complex(x), ctx);
    CHECK(abs(v.real() - agm_oracle(x)).to_ld() <= std::max(v.err, 1e-55L));
  }
}

TEST_CASE("1F0 and 0F0 closed forms") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  Real x(0.25, prec);
  AppValue binom = pfq(HypergeometricSpec({ExactRational(1, 3)}, {}, Complex(x)), ctx);
  CHECK(abs(binom.real() - pow(1L - x, Real(-1L, prec) / 3L)).to_ld() <= binom.err);
  AppValue e = pfq(HypergeometricSpec({}, {}, Complex(Real(5L, prec))), ctx);
  CHECK(e.rigor == Rigor::rigorous);
  CHECK(abs(e.real() - exp(Real(5L, prec))).to_ld() <= e.err);
}

TEST_CASE("terminating series are polynomials valid for any argument") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  // 2F1(-3, 2; 1; x) = 1 - 6x + 6x^2 - 4x^3/... computed from the definition.
  Real x(3L, prec);
  AppValue v = hyp2f1(-3, 2, 1, Complex(x), ctx);
  // (-3)_n (2)_n / (n!^2) x^n, n = 0..3: 1, -6x, 9x^2, -4x^3
  Real exact = 1L - 6L * x + 9L * x * x - 4L * x * x * x;
  CHECK(abs(v.real() - exact).to_ld() <= v.err + 1e-40L);
}

TEST_CASE("pfq domain errors") {
  PrecisionContext ctx(64);
  Complex x(Real(0.5, 128));
  CHECK_THROWS_AS(hyp2f1(1, 1, -2, x, ctx), DomainError);
  CHECK_THROWS_AS(pfq(HypergeometricSpec({1, 1, 1}, {2}, x), ctx), DomainError);
  CHECK_THROWS_AS(hyp2f1(1, 1, 2, Complex(Real(1L, 128)), ctx), DomainError);
  CHECK_THROWS_AS(hyp2f1(1, 1, 2, cplx(0.8, -0.8, 128), ctx), DomainError);
}

TEST_CASE("pfq_unit against closed forms") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  SUBCASE("3F2(1,1,1;2,2;1) is zeta(2)") {
    std::vector<ExactRational> up{1, 1, 1}, lo{2, 2};
    AppValue v = pfq_unit(up, lo, ctx);
    Real zeta2 = const_pi(prec) * const_pi(prec) / 6L;
    CHECK(v.rigor == Rigor::heuristic);
    CHECK(abs(v.real() - zeta2).to_ld() < 1e-25L);
    CHECK(abs(v.real() - zeta2).to_ld() <= 10 * v.err + 1e-40L);
  }
  SUBCASE("Gauss summation for 2F1(a,b;c;1)") {
    std::vector<ExactRational> up{ExactRational(1, 3), kHalf}, lo{2};
    AppValue v = pfq_unit(up, lo, ctx);
    Real a = ExactRational(1, 3).to_real(prec), b = kHalf.to_real(prec), c(2L, prec);
    Real exact = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b));
    CHECK(abs(v.real() - exact).to_ld() < 1e-25L);
  }
  SUBCASE("non-positive parameter excess diverges") {
    std::vector<ExactRational> up{ExactRational(1, 2)}, lo{};
    CHECK_THROWS_AS(pfq_unit(up, lo, ctx), DomainError);
    std::vector<ExactRational> up2{1, 1}, lo2{2};
    CHECK_THROWS_AS(pfq_unit(up2, lo2, ctx), DomainError);
  }
  SUBCASE("doubling the direct terms stays within the reported error") {
    std::vector<ExactRational> up{ExactRational(4, 3), ExactRational(3, 2), ExactRational(5, 3), 1, 1};
    std::vector<ExactRational> lo{2, 2, 2, 2};
    AppValue a = pfq_unit(up, lo, ctx, 64);
    AppValue b = pfq_unit(up, lo, ctx, 128);
    CHECK(abs(a.real() - b.real()).to_ld() <= a.err + b.err);
    // Frozen independent value (mpmath, 30 digits).
    Real ref = Real::parse("1.42115774337097646385965", prec);
    CHECK(abs(a.real() - ref).to_ld() < 1e-20L);
  }
}

TEST_CASE("Clausen route agrees with the direct 3F2 series") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  for (const ExactRational& alpha : {ExactRational(1, 2), ExactRational(1, 3), ExactRational(1, 4)}) {
    for (const Complex& t : {cplx(0.3, 0.0, prec), cplx(-0.9, 0.0, prec), cplx(0.7, 0.0, prec),
                             cplx(0.2, -0.6, prec), cplx(-0.6, 0.7, prec)}) {
      AppValue c = clausen_3f2(alpha, t, ctx);
      AppValue d = hyp3f2(alpha, kHalf, ExactRational(1) - alpha, 1, 1, t, ctx);
      CHECK(dist(c.value, d.value) <= 10 * (c.err + d.err) + 1e-45L);
    }
  }
  CHECK_THROWS_AS(clausen_3f2(kHalf, cplx(1.5, 0.0, prec), ctx), DomainError);
}

TEST_CASE("Clausen route near t = 1 and at large |t|") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  struct Case {
    ExactRational alpha;
    const char* re;
    const char* im;
    const char* want_re;
    const char* want_im;
  };
  // Reference values from an independent arbitrary-precision 3F2.
  const Case cases[] = {
      {ExactRational(1, 3), "0.97", "0", "1.258616426076357559227776112085877898899", "0"},
      {ExactRational(1, 4), "0.99", "0", "1.243362348897499545413468775946137450768", "0"},
      {ExactRational(1, 3), "0.75", "3.125", "0.8726091605810902193246076275405875772374",
       "0.1951507814740179959821271764998848698455"},
      {ExactRational(1, 4), "-2", "5", "0.8164131345569210251311755788344274157932",
       "0.118194169785948522393698209924985873623"},
  };
  for (const auto& c : cases) {
    Complex t(Real::parse(c.re, prec), Real::parse(c.im, prec));
    Complex want(Real::parse(c.want_re, prec), Real::parse(c.want_im, prec));
    AppValue v = clausen_3f2(c.alpha, t, ctx);
    CHECK(dist(v.value, want) < 1e-37L);
    CHECK(v.err < 1e-30L);
  }
}

TEST_CASE("continued log series agrees with the direct series inside the disk") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  const ExactRational alpha(1, 3);
  const ExactRational kappa = alpha * kHalf * (ExactRational(1) - alpha);
  for (const Complex& X : {cplx(0.9, 0.0, prec), cplx(-0.95, 0.0, prec), cplx(0.6, 0.6, prec)}) {
    AppValue cont = mahler_log_series(alpha, X, ctx);
    HypergeometricSpec spec({ExactRational(4, 3), ExactRational(3, 2), ExactRational(5, 3), 1, 1},
                            {2, 2, 2, 2}, X);
    AppValue direct = pfq(spec, ctx);
    Complex expected = direct.value * X * kappa.to_real(prec);
    const long double scale = abs(X * kappa.to_real(prec)).to_ld();
    CHECK(dist(cont.value, expected) <= cont.err + direct.err * scale);
    CHECK(cont.err < 1e-36L);
  }
}

TEST_CASE("continued log series has the right derivative outside the disk") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  const ExactRational alpha(1, 4);
  for (const Complex& X : {cplx(-12.5, 0.0, prec), cplx(-0.9, 1.2, prec)}) {
    Complex h = cplx(1e-15, 0.0, prec);
    AppValue plus = mahler_log_series(alpha, X + h, ctx);
    AppValue minus = mahler_log_series(alpha, X - h, ctx);
    Complex deriv = (plus.value - minus.value) / (h * Real(2L, prec));
    AppValue F = clausen_3f2(alpha, X, ctx);
    Complex expected = (F.value - Real(1L, prec)) / X;
    CHECK(dist(deriv, expected) < 1e-20L);
  }
  CHECK_THROWS_AS(mahler_5f4(alpha, cplx(2.0, 0.0, prec), ctx), DomainError);
}
