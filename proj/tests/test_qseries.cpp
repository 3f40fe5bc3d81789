#include <cmath>

#include "doctest.h"
#include "hyperforge/errors.hpp"
#include "hyperforge/qseries.hpp"

using namespace hyperforge;

namespace {

Complex cplx(double re, double im, Bits prec) { return Complex(Real(re, prec), Real(im, prec)); }

long double dist(const Complex& a, const Complex& b) { return abs(a - b).to_ld(); }

Real agm(Real a, Real b) {
  for (int i = 0; i < 80; ++i) {
    Real an = (a + b) / 2;
    b = sqrt(a * b);
    a = an;
  }
  return a;
}

// Euler's pentagonal number theorem, summed directly.
Complex pentagonal(const Complex& q, int terms) {
  Complex s(Real(1L, q.precision()));
  for (long k = 1; k <= terms; ++k) {
    Complex t = pow(q, k * (3 * k - 1) / 2) + pow(q, k * (3 * k + 1) / 2);
    if (k % 2) s -= t; else s += t;
  }
  return s;
}

}  // namespace

TEST_CASE("q-Pochhammer product against the pentagonal series") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  for (const Complex& q : {cplx(0.3, 0, prec), cplx(-0.5, 0.2, prec), cplx(0.05, 0.6, prec)}) {
    AppValue p = qpoch_inf(q, q, ctx);
    CHECK(dist(p.value, pentagonal(q, 60)) <= p.err + 1e-50L);
    CHECK(p.err < 1e-38L);
  }
}

TEST_CASE("Jacobi's cube identity through an eta quotient") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  EtaQuotientSpec spec;
  spec.exponents = {{1, 3}};
  Complex q = cplx(0.4, -0.3, prec);
  AppValue v = eta_quotient_value(spec, q, ctx);
  Complex s(prec);
  for (long n = 0; n < 60; ++n) {
    Complex t = pow(q, n * (n + 1) / 2) * Real(2 * n + 1, prec);
    if (n % 2) s -= t; else s += t;
  }
  CHECK(dist(v.value, s) <= v.err + 1e-50L);
}

TEST_CASE("fractional leading power uses the principal branch unless asked otherwise") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  EtaQuotientSpec spec;
  spec.q_power = ExactRational(1, 2);
  Complex q(Real(-1L, prec) / 25L);
  AppValue principal = eta_quotient_value(spec, q, ctx);
  AppValue modulus = eta_quotient_value(spec, q, ctx, QPowerBranch::modulus);
  CHECK(abs(principal.value.im - Real(1L, prec) / 5L).to_ld() < 1e-30L);
  CHECK(abs(modulus.value.re - Real(1L, prec) / 5L).to_ld() < 1e-30L);
}

TEST_CASE("nome of signature 2 matches the AGM and e^-pi at alpha = 1/2") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  AppValue q = nome(2, Real(0.5, prec), ctx);
  Real epi = exp(-const_pi(prec));
  CHECK(abs(q.real() - epi).to_ld() <= q.err + 1e-45L);
  for (double a : {0.05, 0.3, 0.9}) {
    Real alpha(a, prec);
    AppValue v = nome(2, alpha, ctx);
    Real ratio = agm(Real(1L, prec), sqrt(1L - alpha)) / agm(Real(1L, prec), sqrt(alpha));
    Real expected = exp(-const_pi(prec) * ratio);
    CHECK(abs(v.real() - expected).to_ld() <= v.err + 1e-45L);
  }
  CHECK_THROWS_AS(nome(2, Real(1.5, prec), ctx), DomainError);
  CHECK_THROWS_AS(nome(5, Real(0.5, prec), ctx), DomainError);
}

TEST_CASE("s_j at the nome is 4^k / (alpha (1 - alpha))") {
  PrecisionContext ctx(160);
  const Bits prec = ctx.compute_bits();
  const long numerators[] = {16, 27, 64};
  for (int j = 2; j <= 4; ++j) {
    for (double a : {0.01, 0.2}) {
      Real alpha(a, prec);
      AppValue q = nome(j, alpha, ctx);
      AppValue s = s_function(j, q.value, ctx);
      Real expected = Real(numerators[j - 2], prec) / (alpha * (1L - alpha));
      CHECK(abs((s.real() - expected) / expected).to_ld() < 1e-40L);
    }
  }
}

TEST_CASE("G has derivative -M(q)/q") {
  PrecisionContext ctx(192);
  const Bits prec = ctx.compute_bits();
  Real q(0.07, prec);
  Real h = ldexp(Real(1L, prec), -60);
  AppValue gp = eisenstein_G(Complex(q + h), ctx);
  AppValue gm = eisenstein_G(Complex(q - h), ctx);
  Real deriv = (gp.real() - gm.real()) / (2L * h);
  AppValue m = eisenstein_M(Complex(q), ctx);
  Real expected = -m.real() / q;
  CHECK(abs((deriv - expected) / expected).to_ld() < 1e-30L);
}

TEST_CASE("weight four Eisenstein identity at the signature-2 nome") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  Real alpha(0.2, prec);
  AppValue q = nome(2, alpha, ctx);
  AppValue m1 = eisenstein_M(q.value, ctx);
  AppValue m4 = eisenstein_M(pow(q.value, 4), ctx);
  Real lhs = 1L - (m1.real() - 1L) * 16L / 240L + (m4.real() - 1L) * 256L / 240L;
  Real f = 1L / agm(Real(1L, prec), sqrt(1L - alpha));
  Real rhs = (1L - 2L * alpha) * pow(f, 4);
  CHECK(abs(lhs - rhs).to_ld() < 1e-35L);
}

TEST_CASE("functional equation of G for p = 2 and p = 3") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  for (const Complex& q : {cplx(0.1, 0, prec), cplx(0.05, 0.1, prec)}) {
    for (long p : {2L, 3L}) {
      Real lhs(prec);
      long double err = 0;
      for (long j = 0; j < p; ++j) {
        AppValue g = eisenstein_G(root_of_unity(j, p, prec) * q, ctx);
        lhs += g.real();
        err += g.err;
      }
      AppValue gp = eisenstein_G(pow(q, p), ctx);
      AppValue gpp = eisenstein_G(pow(q, p * p), ctx);
      Real rhs = gp.real() * (1 + p * p * p) - gpp.real() * (p * p);
      err += gp.err * (1 + p * p * p) + gpp.err * p * p;
      CHECK(abs(lhs - rhs).to_ld() <= err + 1e-40L);
    }
  }
}

TEST_CASE("q-series domain errors") {
  PrecisionContext ctx(64);
  CHECK_THROWS_AS(eisenstein_G(cplx(1.0, 0, 128), ctx), DomainError);
  CHECK_THROWS_AS(eisenstein_G(cplx(0, 0, 128), ctx), DomainError);
  CHECK_THROWS_AS(s_function(2, cplx(0.6, 0.9, 128), ctx), DomainError);
  CHECK_THROWS_AS(s_function(5, cplx(0.1, 0, 128), ctx), DomainError);
}
