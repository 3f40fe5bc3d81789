#include "hyperforge/summation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hyperforge/errors.hpp"
#include "hyperforge/rational.hpp"

namespace hyperforge {

namespace {

long double magnitude(const Complex& z) {
  if (z.im.is_zero()) return std::fabs(z.re.to_ld());
  return std::hypot(z.re.to_ld(), z.im.to_ld());
}

constexpr long double kInf = std::numeric_limits<long double>::infinity();

}  // namespace

AppValue sum_with_tail(const TermGenerator& term, const TailMajorant& majorant,
                       const PrecisionContext& ctx, const SumOptions& options,
                       SumReport* report) {
  const Bits prec = ctx.compute_bits();
  const long double target = options.target_rel < 0 ? ctx.target() : options.target_rel;
  const bool rigorous = static_cast<bool>(majorant);

  Complex sum(prec);
  long double abs_sum_terms = 0;
  long double reference = 0;  // first nonzero term magnitude
  long double prev_abs = -1;
  long double prev_tail = kInf;

  for (std::size_t n = 0;; ++n) {
    if (n >= ctx.max_terms) {
      throw TermCapExceeded("series did not meet its target within " +
                            std::to_string(ctx.max_terms) + " terms");
    }
    Complex t = term(n);
    sum += t;
    const long double a = magnitude(t);
    abs_sum_terms += a;
    if (reference == 0 && a > 0) reference = a;
    if (!rigorous && reference > 0 && a > 0 &&
        std::log2(a) > std::log2(reference) + ctx.working_bits + 64 && n > 8) {
      throw NonConvergent("series terms grow without bound");
    }

    const long double s = magnitude(sum);
    const long double goal = std::max(target * s, options.target_abs);
    long double tail = kInf;
    if (rigorous) {
      tail = majorant(n, a);
    } else if (prev_abs >= 0) {
      if (a == 0) {
        tail = 0;
      } else if (prev_abs > 0) {
        const long double r = a / prev_abs;
        if (r < 0.999L) tail = a * r / (1 - r);
      }
    }

    const bool ready = n + 1 >= options.min_terms;
    bool done = false;
    if (rigorous) {
      done = ready && tail <= goal;
    } else {
      done = ready && tail <= goal && prev_tail <= goal && a <= std::max(goal, 0.0L) * 4;
    }
    if (done) {
      if (report) report->terms = n + 1;
      const long double rounding =
          rounding_bound(abs_sum_terms, prec, options.ops_per_term * static_cast<long double>(n + 2));
      const long double trunc = rigorous ? tail : 2 * tail;
      return AppValue(std::move(sum), trunc + rounding,
                      rigorous ? Rigor::rigorous : Rigor::heuristic);
    }
    prev_tail = tail;
    prev_abs = a;
  }
}

Complex levin_u(std::span<const Complex> sums, std::span<const Complex> terms,
                std::size_t k, Bits prec) {
  if (sums.size() <= k || terms.size() <= k) throw std::invalid_argument("levin_u: too few terms");
  const Bits wp = prec + 4 * static_cast<Bits>(k) + 32;
  Complex num(wp), den(wp);
  const Real kp1(static_cast<long>(k + 1), wp);
  for (std::size_t j = 0; j <= k; ++j) {
    if (terms[j].is_zero()) throw NonConvergent("levin_u: zero term");
    Real c(binomial(static_cast<long>(k), static_cast<long>(j)), wp);
    Real ratio = Real(static_cast<long>(j + 1), wp) / kp1;
    c *= pow(ratio, static_cast<long>(k) - 1);
    if (j % 2 == 1) c = -c;
    Complex omega = terms[j].rounded(wp) * Real(static_cast<long>(j + 1), wp);
    Complex w = Complex(c) / omega;
    num += w * sums[j].rounded(wp);
    den += w;
  }
  return (num / den).rounded(prec);
}

AppValue sum_accelerated(const TermGenerator& term, std::size_t term_budget,
                         const PrecisionContext& ctx, SumReport* report) {
  const Bits prec = ctx.compute_bits();
  const long double target = ctx.target();
  std::vector<Complex> sums, terms;
  Complex sum(prec);
  long double abs_sum_terms = 0;
  long double prev_abs = -1, prev_tail = kInf;
  for (std::size_t n = 0; n < term_budget; ++n) {
    Complex t = term(n);
    sum += t;
    const long double a = magnitude(t);
    abs_sum_terms += a;
    terms.push_back(t);
    sums.push_back(sum);
    const long double s = magnitude(sum);
    long double tail = kInf;
    if (prev_abs >= 0) {
      if (a == 0) {
        tail = 0;
      } else if (prev_abs > 0) {
        const long double r = a / prev_abs;
        if (r < 0.999L) tail = a * r / (1 - r);
      }
    }
    if (n >= 2 && tail <= target * s && prev_tail <= target * s) {
      if (report) report->terms = n + 1;
      const long double rounding = rounding_bound(abs_sum_terms, prec, 8.0L * (n + 2));
      return AppValue(std::move(sum), 2 * tail + rounding, Rigor::heuristic);
    }
    prev_tail = tail;
    prev_abs = a;
  }

  // Levin orders of the same parity are compared; the pair with the smallest
  // difference gives the estimate.
  const std::size_t kmax = std::min<std::size_t>(terms.size() - 1, 90);
  if (kmax < 8) throw NonConvergent("too few terms for acceleration");
  Complex best(prec);
  long double best_diff = kInf;
  Complex prev = levin_u(sums, terms, 4, prec);
  for (std::size_t k = 6; k <= kmax; k += 2) {
    Complex cur = levin_u(sums, terms, k, prec);
    const long double d = magnitude(cur - prev);
    if (d < best_diff) {
      best_diff = d;
      best = cur;
    }
    prev = std::move(cur);
  }
  if (report) {
    report->terms = terms.size();
    report->accelerated = true;
  }
  const long double rounding = rounding_bound(abs_sum_terms, prec, 8.0L * (terms.size() + 2));
  return AppValue(std::move(best), 2 * best_diff + rounding, Rigor::heuristic);
}

Real richardson_limit(std::span<const Real> sums, std::span<const double> n,
                      const Real& g, Bits prec) {
  const std::size_t m = sums.size();
  if (m == 0 || n.size() != m) throw std::invalid_argument("richardson_limit: size mismatch");
  const Bits wp = prec + 64;
  // Unknowns: S, d_0, ..., d_{m-2}.
  std::vector<std::vector<Real>> a(m, std::vector<Real>(m + 1, Real(wp)));
  for (std::size_t i = 0; i < m; ++i) {
    Real ni(n[i], wp);
    Real base = pow(ni, -g.rounded(wp));
    Real inv = 1L / ni;
    a[i][0] = Real(1L, wp);
    Real p = base;
    for (std::size_t k = 1; k < m; ++k) {
      a[i][k] = p;
      p *= inv;
    }
    a[i][m] = sums[i].rounded(wp);
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < m; ++r) {
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    if (a[c][c].is_zero()) throw std::runtime_error("richardson_limit: singular system");
    for (std::size_t r = c + 1; r < m; ++r) {
      Real f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Real> x(m, Real(wp));
  for (std::size_t c = m; c-- > 0;) {
    Real s = a[c][m];
    for (std::size_t k = c + 1; k < m; ++k) s -= a[c][k] * x[k];
    x[c] = s / a[c][c];
  }
  return x[0].rounded(prec);
}

}  // namespace hyperforge
