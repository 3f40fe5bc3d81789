#include <cmath>

#include "doctest.h"
#include "hyperforge/errors.hpp"
#include "hyperforge/mahler.hpp"
#include "hyperforge/rational.hpp"

using namespace hyperforge;

namespace {

Complex cplx(double re, double im, Bits prec) { return Complex(Real(re, prec), Real(im, prec)); }

// Nested binomial sums with machine integers, independent of GMP binomials.
long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long domb_naive(long long n) {
  long long s = 0;
  for (long long k = 0; k <= n; ++k) {
    const long long c = choose(n, k);
    s += c * c * choose(2 * k, k) * choose(2 * n - 2 * k, n - k);
  }
  return s;
}

long long b_naive(long long n) {
  long long s = 0;
  for (long long k = 0; k <= n; ++k) {
    const long long c = choose(n, k);
    s += c * c * choose(2 * k, k);
  }
  return s * choose(2 * n, n);
}

}  // namespace

TEST_CASE("binomial sum sequences match nested sums") {
  CHECK(domb(4) == 2716);
  CHECK(sequence_b(1) == 6);
  CHECK(sequence_b(2) == 90);
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(domb(n) == mpz_class(std::to_string(domb_naive(static_cast<long long>(n)))));
    CHECK(sequence_b(n) == mpz_class(std::to_string(b_naive(static_cast<long long>(n)))));
  }
  for (std::size_t n : {40u, 75u}) {
    CHECK(domb(n) == binomial_sum_direct(SequenceKind::domb, n));
    CHECK(sequence_b(n) == binomial_sum_direct(SequenceKind::b, n));
  }
}

TEST_CASE("one-variable torus integrals") {
  PrecisionContext ctx;
  const Bits prec = ctx.compute_bits();
  LaurentPolynomial p(1);
  p.add({0}, Complex(Real(2L, prec)));
  p.add({1}, Complex(Real(1L, prec)));
  AppValue m = mahler_torus_integral(p, 128, ctx);
  CHECK(std::fabs((m.value.re - log(Real(2L, prec))).to_ld()) < 1e-30L);

  LaurentPolynomial c(1);
  c.add({3}, Complex(Real(3L, prec)));
  AppValue mc = mahler_torus_integral(c, 8, ctx);
  CHECK(std::fabs((mc.value.re - log(Real(3L, prec))).to_ld()) < 1e-30L);

  LaurentPolynomial empty(2);
  CHECK_THROWS_AS(mahler_torus_integral(empty, 8, ctx), NearZeroOnTorus);
}

TEST_CASE("g series agree with torus quadrature") {
  PrecisionContext ctx;
  const Bits prec = ctx.compute_bits();
  AppValue s1 = g_series(1, cplx(8, 0, prec), ctx);
  AppValue q1 = mahler_quadrature(MahlerFamily::g1, cplx(8, 0, prec), 32, ctx);
  CHECK(std::fabs((s1.value.re - q1.value.re).to_ld()) < 1e-12L);
  AppValue s2 = g_series(2, cplx(32, 0, prec), ctx);
  AppValue q2 = mahler_quadrature(MahlerFamily::g2, cplx(32, 0, prec), 32, ctx);
  CHECK(std::fabs((s2.value.re - q2.value.re).to_ld()) < 1e-12L);
  AppValue s3 = g_series(1, cplx(3, 7, prec), ctx);
  AppValue q3 = mahler_quadrature(MahlerFamily::g1, cplx(3, 7, prec), 32, ctx);
  CHECK(std::fabs((s3.value.re - q3.value.re).to_ld()) < 1e-12L);
  CHECK_THROWS_AS(g_series(1, cplx(6, 0, prec), ctx), DomainError);
  CHECK_THROWS_AS(g_series(2, cplx(0, 16, prec), ctx), DomainError);
}

TEST_CASE("f series agree with torus quadrature") {
  PrecisionContext ctx;
  const Bits prec = ctx.compute_bits();
  struct Case {
    int j;
    MahlerFamily family;
    double re, im;
  };
  const Case cases[] = {
      {2, MahlerFamily::f2, 100, 0},  {2, MahlerFamily::f2, 0, 200},  {3, MahlerFamily::f3, 200, 0},
      {3, MahlerFamily::f3, -150, 0}, {4, MahlerFamily::f4, 1000, 0}, {4, MahlerFamily::f4, -600, 400},
  };
  for (const Case& c : cases) {
    CAPTURE(c.j);
    CAPTURE(c.re);
    CAPTURE(c.im);
    AppValue s = f_series(c.j, cplx(c.re, c.im, prec), ctx);
    AppValue q = mahler_quadrature(c.family, cplx(c.re, c.im, prec), 32, ctx);
    CHECK(std::fabs((s.value.re - q.value.re).to_ld()) < 1e-10L);
  }
  CHECK_THROWS_AS(f_series(2, cplx(10, 0, prec), ctx), DomainError);
  CHECK_THROWS_AS(f_series(5, cplx(100, 0, prec), ctx), DomainError);
}

TEST_CASE("two-variable measure by Jensen") {
  PrecisionContext ctx;
  const Bits prec = ctx.compute_bits();
  AppValue m1 = mahler_two_variable(Real(1L, prec), ctx);
  CHECK(std::fabs(m1.value.re.to_ld() - 0.251330433713252231374872566669L) < 1e-20L);

  AppValue m5 = mahler_two_variable(Real(5L, prec), ctx);
  LaurentPolynomial p(2);
  p.add({0, 0}, Complex(Real(5L, prec)));
  for (int s : {-1, 1}) {
    p.add({s, 0}, Complex(Real(1L, prec)));
    p.add({0, s}, Complex(Real(1L, prec)));
  }
  AppValue q5 = mahler_torus_integral(p, 64, ctx);
  CHECK(std::fabs((m5.value.re - q5.value.re).to_ld()) < 1e-25L);
  CHECK(mahler_two_variable(Real(0L, prec), ctx).value.is_zero());
}

TEST_CASE("Bessel I0 squared coefficients") {
  PrecisionContext ctx;
  const Bits prec = ctx.compute_bits();
  const Real u(0.7, prec);
  AppValue i0 = bessel_I0(u, ctx);
  // I_0(2u)^2 = sum C(2n,n) u^{2n} / n!^2
  Real s(prec), pw(1L, prec), fact(1L, prec);
  for (long n = 0; n < 60; ++n) {
    if (n > 0) {
      pw *= u * u;
      fact *= n;
    }
    Real c(binomial(2 * n, n), prec);
    s += c * pw / (fact * fact);
  }
  CHECK(std::fabs((i0.value.re * i0.value.re - s).to_ld()) < 1e-30L);
}

TEST_CASE("Bessel Laplace identity holds only for small x") {
  PrecisionContext ctx;
  const Bits prec = ctx.compute_bits();
  CHECK(bessel_laplace_check(Real(1L, prec) / 10L, ctx).verdict == Verdict::pass);
  CHECK(bessel_laplace_check(Real(1L, prec) / 5L, ctx).verdict == Verdict::pass);
  CHECK(bessel_laplace_check(Real(1L, prec) / 2L, ctx).verdict == Verdict::fail);
}

TEST_CASE("f series match the raw binomial sums") {
  PrecisionContext ctx;
  const Bits prec = ctx.compute_bits();
  // log u - sum c_n / (n u^n), c_n = C(2n,n)^3, C(2n,n)^2 C(3n,n), C(2n,n) C(3n,n) C(4n,n)
  auto raw = [&](int j, long u) {
    Real s = log(Real(u, prec));
    for (long n = 1; n < 400; ++n) {
      mpz_class c;
      if (j == 2) {
        c = binomial(2 * n, n) * binomial(2 * n, n) * binomial(2 * n, n);
      } else if (j == 3) {
        c = binomial(2 * n, n) * binomial(2 * n, n) * binomial(3 * n, n);
      } else {
        c = binomial(2 * n, n) * binomial(3 * n, n) * binomial(4 * n, n);
      }
      Real t(c, prec);
      t /= pow(Real(u, prec), n);
      t /= n;
      s -= t;
    }
    return s;
  };
  for (auto [j, u] : {std::pair{2, 128L}, std::pair{3, 200L}, std::pair{3, 500L}, std::pair{4, 1000L}}) {
    CAPTURE(j);
    CAPTURE(u);
    AppValue f = f_series(j, cplx(static_cast<double>(u), 0, prec), ctx);
    CHECK(std::fabs((f.value.re - raw(j, u)).to_ld()) < std::max(f.err * 10, 1e-30L));
  }
}
