#include <cmath>
#include <limits>
#include <memory>

#include "doctest.h"
#include "hyperforge/errors.hpp"
#include "hyperforge/precision.hpp"
#include "hyperforge/quadrature.hpp"
#include "hyperforge/rational.hpp"
#include "hyperforge/summation.hpp"

using namespace hyperforge;

namespace {

long double rel(const Real& a, const Real& b) { return abs((a - b) / b).to_ld(); }

TermGenerator exp_terms(Bits prec) {
  auto t = std::make_shared<Real>(1L, prec);
  return [t](std::size_t n) {
    if (n > 0) *t /= static_cast<long>(n);
    return Complex(*t);
  };
}

TailMajorant exp_majorant() {
  return [](std::size_t n, long double a) {
    const long double r = 1.0L / (n + 1);
    return a * r / (1 - r);
  };
}

}  // namespace

TEST_CASE("binary operations use the wider precision") {
  Real a(1L, 100), b(3L, 300);
  Real c = a / b;
  CHECK(c.precision() == 300);
  Real third = Real(1L, 300) / Real(3L, 300);
  CHECK(c == third);
  a += b;
  CHECK(a.precision() == 300);
}

TEST_CASE("principal branch of the complex logarithm ignores the sign of zero") {
  Complex z(Real(-1L, 128), -Real(0L, 128));
  Complex l = log(z);
  CHECK(rel(l.im, const_pi(128)) < 1e-35L);
  Complex s = pow(z, Real(0.5, 128));
  CHECK(s.im > 0L);
}

TEST_CASE("complex power with integer exponent") {
  Complex z(Real(1L, 128), Real(1L, 128));
  Complex p = pow(z, 8);
  CHECK(abs(p.re - Real(16L, 128)).to_ld() < 1e-30L);
  CHECK(abs(p.im).to_ld() < 1e-30L);
  Complex q = pow(z, -2);
  CHECK(abs(q.im + Real(0.5, 128)).to_ld() < 1e-30L);
}

TEST_CASE("exact rationals") {
  CHECK(ExactRational::parse("1/100") == ExactRational(1, 100));
  CHECK(ExactRational::parse("0.01") == ExactRational(1, 100));
  CHECK(ExactRational::parse("1e-2") == ExactRational(1, 100));
  CHECK(ExactRational::parse("-3/6") == ExactRational(-1, 2));
  CHECK(ExactRational::parse("-3/6").to_string() == "-1/2");
  CHECK(ExactRational::parse("42").is_integer());
  CHECK_THROWS(ExactRational::parse("1/0"));
  CHECK_THROWS(ExactRational::parse("abc"));
  CHECK(ExactRational(2, 3).pow(-2) == ExactRational(9, 4));
}

TEST_CASE("binomials, factorials and rising factorials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(40, 20) == mpz_class("137846528820"));
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
  CHECK(pochhammer(ExactRational(1, 2), 3) == ExactRational(15, 8));
  CHECK(pochhammer(ExactRational(-2), 3) == ExactRational(0));
  CHECK(pochhammer(ExactRational(7, 3), 0) == ExactRational(1));
}

TEST_CASE("precision context validation") {
  CHECK_THROWS_AS(PrecisionContext(32), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionContext(128, 64, 4), std::invalid_argument);
  PrecisionContext ctx(128);
  CHECK(ctx.compute_bits() == 192);
}

TEST_CASE("rigorous summation of e against the library exponential") {
  for (unsigned bits : {64u, 128u, 256u}) {
    PrecisionContext ctx(bits);
    AppValue e = sum_with_tail(exp_terms(ctx.compute_bits()), exp_majorant(), ctx);
    CHECK(e.rigor == Rigor::rigorous);
    Real ref = exp(Real(1L, ctx.compute_bits()));
    const long double diff = abs(e.real() - ref).to_ld();
    CHECK(diff <= e.err);
    CHECK(e.err <= std::ldexp(3.0L, -static_cast<int>(bits)));
  }
}

TEST_CASE("raising precision by 64 bits stays within the previous error") {
  PrecisionContext lo(128), hi(192);
  AppValue a = sum_with_tail(exp_terms(lo.compute_bits()), exp_majorant(), lo);
  AppValue b = sum_with_tail(exp_terms(hi.compute_bits()), exp_majorant(), hi);
  CHECK(abs(a.real() - b.real()).to_ld() <= a.err);
}

TEST_CASE("heuristic summation of a geometric series") {
  PrecisionContext ctx(128);
  auto t = std::make_shared<Real>(1L, ctx.compute_bits());
  TermGenerator gen = [t](std::size_t n) {
    if (n > 0) *t /= 2L;
    return Complex(*t);
  };
  AppValue s = sum_with_tail(gen, TailMajorant{}, ctx);
  CHECK(s.rigor == Rigor::heuristic);
  CHECK(abs(s.real() - Real(2L, 192)).to_ld() <= s.err);
}

TEST_CASE("all-zero generator sums to exact zero") {
  PrecisionContext ctx(128);
  TermGenerator gen = [](std::size_t) { return Complex(Real(192)); };
  AppValue s = sum_with_tail(gen, TailMajorant{}, ctx);
  CHECK(s.real().is_zero());
  CHECK(s.err == 0.0L);
}

TEST_CASE("harmonic series exhausts the term cap") {
  PrecisionContext ctx(64, 64, 2000);
  TermGenerator gen = [](std::size_t n) { return Complex(Real(1L, 128) / static_cast<long>(n + 1)); };
  CHECK_THROWS_AS(sum_with_tail(gen, TailMajorant{}, ctx), TermCapExceeded);
}

TEST_CASE("growing terms are reported as non-convergent") {
  PrecisionContext ctx(64);
  TermGenerator gen = [](std::size_t n) { return Complex(ldexp(Real(1L, 128), static_cast<long>(n))); };
  CHECK_THROWS_AS(sum_with_tail(gen, TailMajorant{}, ctx), NonConvergent);
}

TEST_CASE("Levin acceleration of the alternating series for log 2") {
  PrecisionContext ctx(128);
  const Bits prec = ctx.compute_bits();
  TermGenerator gen = [prec](std::size_t n) {
    Real t = Real(1L, prec) / static_cast<long>(n + 1);
    return Complex(n % 2 ? -t : t);
  };
  SumReport report;
  AppValue s = sum_accelerated(gen, 60, ctx, &report);
  CHECK(report.accelerated);
  CHECK(rel(s.real(), const_log2(prec)) < 1e-30L);
  CHECK(abs(s.real() - const_log2(prec)).to_ld() <= s.err);
}

TEST_CASE("Richardson extrapolation of zeta(2) partial sums") {
  const Bits prec = 192;
  std::vector<Real> sums;
  std::vector<double> counts;
  Real s(prec);
  std::size_t next = 16;
  for (std::size_t n = 1; n <= 16384; ++n) {
    s += Real(1L, prec) / (static_cast<long>(n) * static_cast<long>(n));
    if (n == next) {
      sums.push_back(s);
      counts.push_back(static_cast<double>(n));
      next *= 2;
    }
  }
  Real zeta2 = const_pi(prec) * const_pi(prec) / 6L;
  Real est = richardson_limit(sums, counts, Real(1L, prec), prec);
  CHECK(rel(est, zeta2) < 1e-30L);
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const Bits prec = 200;
  GaussRule rule = gauss_legendre(20, prec);
  REQUIRE(rule.nodes.size() == 20);
  for (std::size_t i = 1; i < rule.nodes.size(); ++i) CHECK(rule.nodes[i - 1] < rule.nodes[i]);
  for (long k : {0L, 5L, 19L}) {
    Real sum(prec);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * pow(rule.nodes[i], 2 * k);
    CHECK(rel(sum, Real(2L, prec) / (2 * k + 1)) < 1e-55L);
  }
  GaussRule odd = gauss_legendre(7, prec);
  CHECK(odd.nodes[3].is_zero());
  Real sum(prec);
  for (std::size_t i = 0; i < odd.nodes.size(); ++i) sum += odd.weights[i] * exp(odd.nodes[i]);
  Real exact = exp(Real(1L, prec)) - exp(Real(-1L, prec));
  CHECK(rel(sum, exact) < 1e-12L);
}
