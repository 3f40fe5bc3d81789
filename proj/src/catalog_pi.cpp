#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "catalog_internal.hpp"
#include "hyperforge/mahler.hpp"

namespace hyperforge::catalog_detail {

namespace {

constexpr Tolerance kTight{1e-30L, 0};
constexpr std::size_t kTermBudget = 200;

mpz_class power(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

Real sqrt3(Bits prec) { return sqrt(Real(3L, prec)); }

Sides finish(const TermGenerator& term, const TailMajorant& majorant, const Real& target,
             const EvalContext& ec) {
  std::string note;
  AppValue lhs = bounded_series(term, majorant, ec.ctx, kTermBudget, &note);
  return Sides{lhs, constant(target), note, {}};
}

// sum (-1)^n (slope n + 1) a_n / 32^n against 2/pi
Sides pi_1(long slope, long offset, const EvalContext& ec) {
  const Bits prec = ec.ctx.compute_bits();
  auto term = [=](std::size_t n) {
    mpq_class t = ratio(mpz_class(slope * static_cast<long>(n) + offset) * domb(n), power(32, n));
    if (n % 2) t = -t;
    return Complex(Real(t, prec));
  };
  return finish(term, poly_geometric_majorant(slope, offset, 0.5L), 2L / const_pi(prec), ec);
}

Sides chudnovsky(long linear, const EvalContext& ec) {
  const Bits prec = ec.ctx.compute_bits();
  const long constant_term = 13591409;
  const mpz_class c3 = power(640320, 3);
  // Exact rational part (-1)^n (6n)! (A + B n) / (n!^3 (3n)! 640320^(3n)).
  auto term = [=](std::size_t n) {
    const unsigned long k = n;
    mpz_class num = factorial(6 * k) * (mpz_class(constant_term) + mpz_class(linear) * mpz_class(k));
    mpz_class f = factorial(k);
    mpz_class den = f * f * f * factorial(3 * k);
    mpz_class cp;
    mpz_pow_ui(cp.get_mpz_t(), c3.get_mpz_t(), k);
    den *= cp;
    mpq_class t = ratio(num, den);
    if (n % 2) t = -t;
    return Complex(Real(t, prec));
  };
  const long double rho = 1728.0L / std::pow(640320.0L, 3);
  std::string note;
  AppValue s = bounded_series(term, poly_geometric_majorant(linear, constant_term, rho), ec.ctx, kTermBudget, &note);
  const Real c(640320L, prec);
  AppValue lhs = av_scale(s, Real(12L, prec) / (c * sqrt(c)));
  return Sides{lhs, constant(1L / const_pi(prec)), note, {}};
}

void add(std::vector<IdentityCheck>& out, std::string id, std::string anchor, bool control,
         std::function<Sides(const EvalContext&)> eval) {
  out.push_back({std::move(id), std::move(anchor), "no parameters", {}, {}, kTight, false, control,
                 [eval](const ParamPoint&, const EvalContext& ec) { return eval(ec); }});
}

}  // namespace

void register_pi(std::vector<IdentityCheck>& out) {
  add(out, "PI_1", "2/pi = sum (-1)^n (3n+1) a_n / 32^n, a_n the Domb numbers", false,
      [](const EvalContext& ec) { return pi_1(3, 1, ec); });
  add(out, "PI_1_PERTURBED", "control: PI_1 with 3n+1 replaced by 3n+2", true,
      [](const EvalContext& ec) { return pi_1(3, 2, ec); });

  add(out, "PI_2", "8 sqrt3 / (3 pi) = sum (5n+1) a_n / 64^n", false, [](const EvalContext& ec) {
    const Bits prec = ec.ctx.compute_bits();
    auto term = [=](std::size_t n) {
      return Complex(Real(ratio(mpz_class(5 * static_cast<long>(n) + 1) * domb(n), power(64, n)), prec));
    };
    return finish(term, poly_geometric_majorant(5, 1, 0.25L), 8L * sqrt3(prec) / (3L * const_pi(prec)), ec);
  });

  add(out, "PI_3", "(9 + 5 sqrt3)/pi = sum (6n + 3 - sqrt3) ((3 sqrt3 - 5)/4)^n a_n", false,
      [](const EvalContext& ec) {
        const Bits prec = ec.ctx.compute_bits();
        const Real s3 = sqrt3(prec);
        const Real x = (3L * s3 - 5L) / 4L;
        auto term = [=](std::size_t n) {
          const long k = static_cast<long>(n);
          return Complex((Real(6 * k + 3, prec) - s3) * pow(x, k) * Real(domb(n), prec));
        };
        const long double rho = 16 * x.to_ld() * (1 + 1e-15L);
        return finish(term, poly_geometric_majorant(6, 3, rho), (9L + 5L * s3) / const_pi(prec), ec);
      });

  add(out, "PI_4", "2(64 + 29 sqrt3)/pi = sum (520n + 159 - 48 sqrt3) ((80 sqrt3 - 139)/484)^n b_n", false,
      [](const EvalContext& ec) {
        const Bits prec = ec.ctx.compute_bits();
        const Real s3 = sqrt3(prec);
        const Real y = (80L * s3 - 139L) / 484L;
        auto term = [=](std::size_t n) {
          const long k = static_cast<long>(n);
          return Complex((Real(520 * k + 159, prec) - 48L * s3) * pow(y, k) * Real(sequence_b(n), prec));
        };
        const long double rho = 36 * std::fabs(y.to_ld()) * (1 + 1e-15L);
        return finish(term, poly_geometric_majorant(520, 159, rho),
                      2L * (64L + 29L * s3) / const_pi(prec), ec);
      });

  add(out, "RAMANUJAN_8PI", "8/pi = sum (20n+3) (1/4)_n (1/2)_n (3/4)_n / n!^3 (-1/4)^n", false,
      [](const EvalContext& ec) {
        const Bits prec = ec.ctx.compute_bits();
        auto coeffs = std::make_shared<std::vector<mpq_class>>(1, mpq_class(1));
        auto term = [=](std::size_t n) {
          while (coeffs->size() <= n) {
            const long m = static_cast<long>(coeffs->size());
            mpq_class r = ratio(mpz_class((4 * m - 3) * (2 * m - 1)) * (4 * m - 1), mpz_class(32) * m * m * m);
            coeffs->push_back(coeffs->back() * r);
          }
          mpq_class t = (*coeffs)[n] * ratio(mpz_class(20 * static_cast<long>(n) + 3), power(4, n));
          if (n % 2) t = -t;
          return Complex(Real(t, prec));
        };
        return finish(term, poly_geometric_majorant(20, 3, 0.25L), 8L / const_pi(prec), ec);
      });

  add(out, "CHUDNOVSKY", "1/pi = 12 sum (-1)^n (6n)! (13591409 + 545140134 n) / (n!^3 (3n)! 640320^(3n+3/2))",
      false, [](const EvalContext& ec) { return chudnovsky(545140134, ec); });
  add(out, "CHUDNOVSKY_PERTURBED", "control: CHUDNOVSKY with the linear coefficient 54513013", true,
      [](const EvalContext& ec) { return chudnovsky(54513013, ec); });

  add(out, "YANG", "18/(pi sqrt15) = sum (4n+1)/36^n sum_k C(n,k)^4", false, [](const EvalContext& ec) {
    const Bits prec = ec.ctx.compute_bits();
    auto term = [=](std::size_t n) {
      const long k = static_cast<long>(n);
      mpz_class s = 0;
      for (long j = 0; j <= k; ++j) {
        mpz_class c = binomial(k, j);
        c *= c;
        s += c * c;
      }
      return Complex(Real(ratio(mpz_class(4 * k + 1) * s, power(36, n)), prec));
    };
    return finish(term, poly_geometric_majorant(4, 1, 16.0L / 36.0L),
                  18L / (const_pi(prec) * sqrt(Real(15L, prec))), ec);
  });
}

}  // namespace hyperforge::catalog_detail
