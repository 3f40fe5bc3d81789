#include "hyperforge/mahler.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "hyperforge/errors.hpp"
#include "hyperforge/hypergeometric.hpp"
#include "hyperforge/interval.hpp"
#include "hyperforge/quadrature.hpp"
#include "hyperforge/rational.hpp"
#include "hyperforge/summation.hpp"

namespace hyperforge {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

// Domb: n^3 a_n = 2(2n-1)(5n^2-5n+2) a_{n-1} - 64(n-1)^3 a_{n-2}
// b_n = C(2n,n) c_n with n^2 c_n = (10n^2-10n+3) c_{n-1} - 9(n-1)^2 c_{n-2}
void BinomialSumSequence::extend_to(std::size_t n) {
  if (values_.empty()) {
    values_.push_back(1);
    inner_.push_back(1);
  }
  while (values_.size() <= n) {
    const unsigned long m = values_.size();
    if (kind_ == SequenceKind::domb) {
      if (m == 1) {
        values_.push_back(4);
        continue;
      }
      const mpz_class& a1 = values_[m - 1];
      const mpz_class& a2 = values_[m - 2];
      mpz_class mm(static_cast<unsigned long>(m));
      mpz_class c1 = 2 * (2 * mm - 1) * (5 * mm * mm - 5 * mm + 2);
      mpz_class c2 = (mm - 1) * (mm - 1) * (mm - 1) * 64;
      mpz_class num = c1 * a1 - c2 * a2;
      mpz_class den = mm * mm * mm;
      mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      values_.push_back(num);
    } else {
      mpz_class c;
      if (m == 1) {
        c = 3;
      } else {
        mpz_class mm(static_cast<unsigned long>(m));
        mpz_class num = (10 * mm * mm - 10 * mm + 3) * inner_[m - 1] - 9 * (mm - 1) * (mm - 1) * inner_[m - 2];
        mpz_class den = mm * mm;
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        c = num;
      }
      inner_.push_back(c);
      values_.push_back(binomial(static_cast<long>(2 * m), static_cast<long>(m)) * c);
    }
  }
}

mpz_class BinomialSumSequence::at(std::size_t n) {
  std::lock_guard<std::mutex> lock(mutex_);
  extend_to(n);
  return values_[n];
}

std::vector<mpz_class> BinomialSumSequence::prefix(std::size_t n) {
  std::lock_guard<std::mutex> lock(mutex_);
  extend_to(n);
  return std::vector<mpz_class>(values_.begin(), values_.begin() + static_cast<long>(n + 1));
}

namespace {

BinomialSumSequence& shared_sequence(SequenceKind kind) {
  static BinomialSumSequence domb_seq(SequenceKind::domb);
  static BinomialSumSequence b_seq(SequenceKind::b);
  return kind == SequenceKind::domb ? domb_seq : b_seq;
}

}  // namespace

mpz_class domb(std::size_t n) { return shared_sequence(SequenceKind::domb).at(n); }
mpz_class sequence_b(std::size_t n) { return shared_sequence(SequenceKind::b).at(n); }

mpz_class binomial_sum_direct(SequenceKind kind, std::size_t n) {
  const long N = static_cast<long>(n);
  mpz_class s = 0;
  for (long k = 0; k <= N; ++k) {
    mpz_class c = binomial(N, k);
    if (kind == SequenceKind::domb) {
      s += c * c * binomial(2 * k, k) * binomial(2 * N - 2 * k, N - k);
    } else {
      s += c * c * binomial(2 * k, k);
    }
  }
  if (kind == SequenceKind::b) s *= binomial(2 * N, N);
  return s;
}

AppValue g_series(int j, const Complex& u_in, const PrecisionContext& ctx) {
  if (j != 1 && j != 2) throw DomainError("g_j is defined for j = 1, 2");
  const Bits prec = ctx.compute_bits();
  const Complex u = u_in.rounded(prec);
  const long double au = magnitude(u);
  const long double bound = j == 1 ? 6.0L : 16.0L;
  if (!(au > bound)) {
    throw DomainError("g_" + std::to_string(j) + " series needs |u| > " + std::to_string(static_cast<int>(bound)));
  }
  // g_1: terms b_n u^{-2n} / (2n), b_n <= 36^n; g_2: a_n u^{-n} / n, a_n <= 16^n.
  const Complex step = j == 1 ? Complex(Real(1L, prec)) / (u * u) : Complex(Real(1L, prec)) / u;
  const long double rho = j == 1 ? 36.0L / (au * au) : 16.0L / au;
  BinomialSumSequence& seq = shared_sequence(j == 1 ? SequenceKind::b : SequenceKind::domb);
  Complex w = step;
  TermGenerator gen = [&](std::size_t k) {
    if (k == 0) return Complex(log(abs(u)));
    Complex t = w;
    const mpz_class c = seq.at(k);
    mpfr_mul_z(t.re.get(), t.re.get(), c.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_z(t.im.get(), t.im.get(), c.get_mpz_t(), MPFR_RNDN);
    t /= Real(static_cast<long>(j == 1 ? 2 * k : k), prec);
    w *= step;
    return -t;
  };
  TailMajorant majorant = [rho, j](std::size_t k, long double) {
    const long double m = static_cast<long double>(k + 1);
    return std::pow(rho, m) / ((j == 1 ? 2 : 1) * m * (1 - rho));
  };
  AppValue s = sum_with_tail(gen, majorant, ctx);
  return av_re(s);
}

AppValue f_series(int j, const Complex& u_in, const PrecisionContext& ctx) {
  if (j < 2 || j > 4) throw DomainError("f_j is defined for j = 2, 3, 4");
  const Bits prec = ctx.compute_bits();
  const Complex u = u_in.rounded(prec);
  if (u.is_zero()) throw DomainError("f_j needs u != 0");
  const long xs[] = {64, 108, 256};
  const ExactRational alphas[] = {ExactRational(1, 2), ExactRational(1, 3), ExactRational(1, 4)};
  const long x = xs[j - 2];
  if (u.im.is_zero() && u.re > 0L && u.re <= x) {
    throw DomainError("f_" + std::to_string(j) + " is not harmonic on (0, " + std::to_string(x) + "]");
  }
  Complex X = Complex(Real(x, prec)) / u;
  AppValue phi = mahler_log_series(alphas[j - 2], X, ctx);
  Real v = log(abs(u)) - phi.value.re;
  return AppValue(v, phi.err + rounding_bound(std::fabs(v.to_ld()) + 1, prec, 8), phi.rigor);
}

AppValue f_series(int j, const AppValue& u, const PrecisionContext& ctx) {
  AppValue f = f_series(j, u.value, ctx);
  // |d f / d u| = |3F2(x_j/u)| / |u|, with the 3F2 factor bounded by 8 here.
  f.err += 8 * u.err / magnitude(u.value);
  f.rigor = weakest(f.rigor, u.rigor);
  return f;
}

AppValue g_series(int j, const AppValue& u, const PrecisionContext& ctx) {
  AppValue g = g_series(j, u.value, ctx);
  const long double au = magnitude(u.value);
  const long double r = j == 1 ? 36.0L / (au * au) : 16.0L / au;
  // |g'(u)| <= (1 + r/(1-r)) / |u| from the majorant of the series.
  g.err += u.err * (1 + r / (1 - r)) / (au - u.err);
  g.rigor = weakest(g.rigor, u.rigor);
  return g;
}

void LaurentPolynomial::add(std::vector<int> exponents, const Complex& coefficient) {
  if (static_cast<int>(exponents.size()) != variables) {
    throw DomainError("monomial has the wrong number of variables");
  }
  terms.emplace_back(std::move(exponents), coefficient);
}

Complex LaurentPolynomial::evaluate(const std::vector<Complex>& point) const {
  Bits prec = 64;
  for (const auto& [e, c] : terms) prec = std::max(prec, c.precision());
  Complex s(prec);
  for (const auto& [e, c] : terms) {
    Complex m = c;
    for (int v = 0; v < variables; ++v) {
      if (e[v] != 0) m *= pow(point[v], static_cast<long>(e[v]));
    }
    s += m;
  }
  return s;
}

LaurentPolynomial mahler_polynomial(MahlerFamily family, const Complex& u_in, Bits prec) {
  const Complex u = u_in.rounded(prec);
  const Complex one(Real(1L, prec));
  LaurentPolynomial p(3);
  auto pair_product = [&](int a, int b, const Complex& c) {
    for (int sa : {-1, 1}) {
      for (int sb : {-1, 1}) {
        std::vector<int> e(3, 0);
        e[a] = sa;
        e[b] = sb;
        p.add(e, c);
      }
    }
  };
  switch (family) {
    case MahlerFamily::g1:
      p.add({0, 0, 0}, u);
      for (int v = 0; v < 3; ++v) {
        for (int s : {-1, 1}) {
          std::vector<int> e(3, 0);
          e[v] = s;
          p.add(e, one);
        }
      }
      break;
    case MahlerFamily::g2:
      p.add({0, 0, 0}, Complex(Real(4L, prec)) - u);
      pair_product(0, 1, one);
      pair_product(0, 2, one);
      pair_product(1, 2, one);
      break;
    case MahlerFamily::f2:
      p.add({0, 0, 0}, sqrt(u));
      for (int a : {-1, 1}) {
        for (int b : {-1, 1}) {
          for (int c : {-1, 1}) p.add({a, b, c}, one);
        }
      }
      break;
    case MahlerFamily::f3: {
      p.add({0, 0, 0}, u);
      const std::pair<int, long> sq[] = {{-2, 1}, {0, 2}, {2, 1}};
      const std::pair<int, long> cube[] = {{-2, 1}, {-1, 3}, {0, 3}, {1, 1}};
      for (const auto& [ex, cx] : sq) {
        for (const auto& [ey, cy] : sq) {
          for (const auto& [ez, cz] : cube) {
            p.add({ex, ey, ez}, Complex(Real(-cx * cy * cz, prec)));
          }
        }
      }
      break;
    }
    case MahlerFamily::f4:
      p.add({4, 0, 0}, one);
      p.add({0, 4, 0}, one);
      p.add({0, 0, 4}, one);
      p.add({0, 0, 0}, one);
      p.add({1, 1, 1}, pow(u, Real(1L, prec) / 4L));
      break;
  }
  return p;
}

long mahler_multiplier(MahlerFamily family) {
  switch (family) {
    case MahlerFamily::f2: return 2;
    case MahlerFamily::f4: return 4;
    default: return 1;
  }
}

AppValue mahler_quadrature(MahlerFamily family, const Complex& u, unsigned grid, const PrecisionContext& ctx) {
  LaurentPolynomial p = mahler_polynomial(family, u, ctx.compute_bits());
  AppValue m = mahler_torus_integral(p, grid, ctx);
  const long k = mahler_multiplier(family);
  return AppValue(m.value * Real(k, ctx.compute_bits()), m.err * k, m.rigor);
}

AppValue mahler_two_variable(const Real& k_in, const PrecisionContext& ctx) {
  const Bits prec = ctx.compute_bits();
  const Real k = k_in.rounded(prec);
  if (k < 0L) throw DomainError("mahler_two_variable expects k >= 0");
  if (k.is_zero()) return AppValue(Real(prec), 0.0L);
  const Real pi = const_pi(prec);
  // Jensen in x: m_x(x^2 + c x + 1) = arccosh(|c|/2) when |c| >= 2 with
  // c = k + 2 cos(theta); nonzero for cos(theta) >= (2 - k)/2.
  const Real theta0 = k >= 4L ? pi : acos((2L - k) / 2L);
  const Real smax = sqrt(theta0);
  const unsigned nodes = static_cast<unsigned>(std::ceil(prec * 0.25)) + 16;
  const GaussRule& rule = cached_gauss_legendre(nodes, prec);
  auto integrate = [&](unsigned panels) {
    Real total(prec);
    for (unsigned p = 0; p < panels; ++p) {
      const Real a = smax * static_cast<long>(p) / static_cast<long>(panels);
      const Real b = smax * static_cast<long>(p + 1) / static_cast<long>(panels);
      const Real mid = (a + b) / 2, half = (b - a) / 2;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Real s = mid + half * rule.nodes[i];
        const Real c = (k + 2L * cos(theta0 - s * s)) / 2L;
        if (!(c > 1L)) continue;
        total += rule.weights[i] * half * acosh(c) * 2L * s;
      }
    }
    return total / pi;
  };
  Real coarse = integrate(4);
  Real fine = integrate(8);
  const long double err = std::fabs((fine - coarse).to_ld()) + rounding_bound(fine.to_ld(), prec, 16.0L * nodes);
  return AppValue(fine, err, Rigor::heuristic);
}

AppValue bessel_I0(const Real& u_in, const PrecisionContext& ctx) {
  const Bits prec = ctx.compute_bits();
  const Real u = u_in.rounded(prec);
  const Real u2 = u * u;
  const long double au2 = u2.to_ld();
  Real t(1L, prec);
  TermGenerator gen = [&](std::size_t n) {
    if (n > 0) {
      t *= u2;
      t /= static_cast<long>(n * n);
    }
    return Complex(t);
  };
  TailMajorant majorant = [au2](std::size_t n, long double a) {
    const long double r = au2 / ((n + 1.0L) * (n + 1.0L));
    if (r >= 1) return kInf;
    return a * r / (1 - r);
  };
  return sum_with_tail(gen, majorant, ctx);
}

CheckResult bessel_laplace_check(const Real& x_in, const PrecisionContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  const Bits prec = ctx.compute_bits();
  const Real x = x_in.rounded(prec);
  if (!(x > 0L)) throw DomainError("Bessel Laplace check needs x > 0");
  const Real beta = 3L * (x + 1L / x);
  const Real decay = beta - 6L;
  if (!(decay > 0L)) throw DomainError("Bessel Laplace integrand does not decay (x = 1)");

  // I_0(2u) <= e^{2u}: the tail beyond U is at most e^{-(beta-6)U}/(beta-6).
  const long double d = decay.to_ld();
  const long double U = (prec + 8) * 0.6931471805599453L / d;
  const long double tail = std::exp(-d * U) / d;
  const long double width = std::min(1.0L, 2.0L / d);
  const unsigned panels = static_cast<unsigned>(std::ceil(U / width));
  const Real h(U / panels, prec);

  auto integrate = [&](unsigned nodes) {
    const GaussRule& rule = cached_gauss_legendre(nodes, prec);
    Real total(prec);
    long double err = 0;
    for (unsigned p = 0; p < panels; ++p) {
      const Real mid = h * static_cast<long>(2 * p + 1) / 2L;
      const Real half = h / 2L;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Real u = mid + half * rule.nodes[i];
        AppValue i0 = bessel_I0(u, ctx);
        const Real w = rule.weights[i] * half * exp(-beta * u);
        const Real c = i0.real() * i0.real() * i0.real();
        total += w * c;
        err += w.to_ld() * 3 * i0.real().to_ld() * i0.real().to_ld() * i0.err;
      }
    }
    return std::make_pair(total, err);
  };
  const unsigned nodes = static_cast<unsigned>(std::ceil(prec * 0.15)) + 12;
  auto [lhs, lhs_err] = integrate(nodes);
  auto [check, check_err] = integrate(nodes + 8);
  const long double quad_err = std::fabs((lhs - check).to_ld());

  const Real one_plus = 1L + 3L * x * x;
  const Real z = 256L * x * x / (9L * pow(one_plus, 4));
  AppValue f = hyp3f2(ExactRational(1, 4), ExactRational(1, 2), ExactRational(3, 4), 1, 1, Complex(z), ctx);
  const Real pre = x / (3L * one_plus);
  AppValue rhs = av_scale(f, pre);

  CheckResult result;
  result.id = "BESSEL_LAPLACE";
  result.params.emplace_back("x", x_in.to_string(20));
  result.lhs = AppValue(check, tail + quad_err + lhs_err + check_err +
                                   rounding_bound(check.to_ld(), prec, 16.0L * panels * nodes),
                        Rigor::heuristic);
  result.rhs = rhs;
  judge(result, Tolerance{0, 1e-10L}, ctx.working_bits, false);
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace hyperforge
