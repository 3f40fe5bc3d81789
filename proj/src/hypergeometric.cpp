#include "hyperforge/hypergeometric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hyperforge/errors.hpp"
#include "hyperforge/summation.hpp"

namespace hyperforge {

namespace {

bool is_nonpositive_integer(const ExactRational& a) { return a.is_integer() && a.sign() <= 0; }

// Exact term ratio t_{n+1}/t_n = x * num(n) / den(n).
class TermRatio {
 public:
  TermRatio(const std::vector<ExactRational>& upper, const std::vector<ExactRational>& lower) {
    up_den_ = 1;
    low_den_ = 1;
    for (const auto& a : upper) {
      up_.emplace_back(a.numerator(), a.denominator());
      up_den_ *= a.denominator();
    }
    for (const auto& b : lower) {
      low_.emplace_back(b.numerator(), b.denominator());
      low_den_ *= b.denominator();
    }
  }

  void at(unsigned long n, mpz_class& num, mpz_class& den) {
    num = low_den_;
    den = up_den_;
    den *= n + 1;
    for (const auto& [p, q] : up_) {
      mpz_mul_ui(tmp_.get_mpz_t(), q.get_mpz_t(), n);
      tmp_ += p;
      num *= tmp_;
    }
    for (const auto& [p, q] : low_) {
      mpz_mul_ui(tmp_.get_mpz_t(), q.get_mpz_t(), n);
      tmp_ += p;
      den *= tmp_;
    }
  }

 private:
  std::vector<std::pair<mpz_class, mpz_class>> up_, low_;
  mpz_class up_den_, low_den_, tmp_;
};

void scale_by_ratio(Real& t, const mpz_class& num, const mpz_class& den) {
  mpfr_mul_z(t.get(), t.get(), num.get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(t.get(), t.get(), den.get_mpz_t(), MPFR_RNDN);
}

// Sup over m >= n of the term ratio modulus, or +inf when no bound applies yet.
class RatioBound {
 public:
  RatioBound(const HypergeometricSpec& spec, long double absx) : absx_(absx) {
    for (const auto& a : spec.upper) upper_.push_back(a.to_double());
    for (const auto& b : spec.lower) beta_.push_back(b.to_double());
    beta_.push_back(1.0);
    double lowest = 0;
    for (double v : upper_) lowest = std::min(lowest, v);
    for (double v : beta_) lowest = std::min(lowest, v);
    n_min_ = static_cast<std::size_t>(std::ceil(-lowest)) + 1;
  }

  long double operator()(std::size_t n) const {
    if (n < n_min_) return std::numeric_limits<long double>::infinity();
    const long double m = static_cast<long double>(n);
    long double r = absx_;
    for (std::size_t i = 0; i < beta_.size(); ++i) {
      if (i < upper_.size()) {
        r *= std::max(1.0L, (m + upper_[i]) / (m + beta_[i]));
      } else {
        r /= (m + beta_[i]);
      }
    }
    return r * (1 + 1e-15L);
  }

 private:
  long double absx_;
  std::vector<double> upper_, beta_;
  std::size_t n_min_ = 0;
};

}  // namespace

void HypergeometricSpec::validate() const {
  for (const auto& b : lower) {
    if (is_nonpositive_integer(b)) {
      throw DomainError("lower parameter " + b.to_string() + " is a nonpositive integer");
    }
  }
  if (upper.size() > lower.size() + 1) {
    throw DomainError("pFq with p > q + 1 diverges");
  }
}

AppValue pfq(const HypergeometricSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  const Bits prec = ctx.compute_bits();
  const Complex x = spec.argument.rounded(prec);
  const bool real_arg = x.is_real();

  bool terminating = false;
  unsigned long last = 0;
  for (const auto& a : spec.upper) {
    if (is_nonpositive_integer(a)) {
      const unsigned long m = static_cast<unsigned long>(-a.numerator().get_si());
      if (!terminating || m < last) last = m;
      terminating = true;
    }
  }

  const long double absx = abs(x).to_ld();
  if (!terminating && spec.upper.size() == spec.lower.size() + 1 && absx >= 1.0L) {
    throw DomainError("pFq with p = q + 1 requires |x| < 1, got |x| = " + std::to_string(static_cast<double>(absx)));
  }

  TermRatio ratio(spec.upper, spec.lower);
  mpz_class num, den;

  if (terminating) {
    Complex sum(prec), t(Real(1L, prec));
    long double abs_total = 0;
    for (unsigned long n = 0; n <= last; ++n) {
      sum += t;
      abs_total += std::fabs(t.re.to_ld()) + std::fabs(t.im.to_ld());
      ratio.at(n, num, den);
      scale_by_ratio(t.re, num, den);
      scale_by_ratio(t.im, num, den);
      t *= x;
    }
    return AppValue(std::move(sum), rounding_bound(abs_total, prec, 8.0L * (last + 2)));
  }

  Complex t(Real(1L, prec));
  TermGenerator gen = [&](std::size_t n) {
    Complex current = t;
    ratio.at(n, num, den);
    scale_by_ratio(t.re, num, den);
    if (!real_arg) scale_by_ratio(t.im, num, den);
    t *= x;
    return current;
  };

  const bool entire = spec.upper.size() <= spec.lower.size();
  TailMajorant majorant;
  if (entire || absx <= 0.5L) {
    RatioBound bound(spec, absx);
    majorant = [bound](std::size_t n, long double abs_term) {
      const long double r = bound(n);
      if (!(r < 1)) return std::numeric_limits<long double>::infinity();
      return abs_term * r / (1 - r);
    };
  }
  return sum_with_tail(gen, majorant, ctx);
}

AppValue hyp2f1(const ExactRational& a, const ExactRational& b, const ExactRational& c,
                const Complex& x, const PrecisionContext& ctx) {
  return pfq(HypergeometricSpec({a, b}, {c}, x), ctx);
}

AppValue hyp3f2(const ExactRational& a1, const ExactRational& a2, const ExactRational& a3,
                const ExactRational& b1, const ExactRational& b2, const Complex& x,
                const PrecisionContext& ctx) {
  return pfq(HypergeometricSpec({a1, a2, a3}, {b1, b2}, x), ctx);
}

AppValue pfq_unit(std::span<const ExactRational> upper, std::span<const ExactRational> lower,
                  const PrecisionContext& ctx, std::size_t base_terms) {
  const Bits prec = ctx.compute_bits();
  HypergeometricSpec spec(std::vector<ExactRational>(upper.begin(), upper.end()),
                          std::vector<ExactRational>(lower.begin(), lower.end()),
                          Complex(Real(1L, prec)));
  spec.validate();
  if (spec.upper.size() <= spec.lower.size()) return pfq(spec, ctx);

  ExactRational gap;
  for (const auto& b : spec.lower) gap += b;
  for (const auto& a : spec.upper) gap -= a;
  if (gap.sign() <= 0) {
    throw DomainError("pFq(1) diverges: parameter excess " + gap.to_string() + " is not positive");
  }
  for (const auto& a : spec.upper) {
    if (is_nonpositive_integer(a)) return pfq(spec, ctx);
  }

  constexpr int kLevels = 12;
  if (base_terms < 8) base_terms = 8;
  const std::size_t total = base_terms << kLevels;
  if (total > ctx.max_terms) throw TermCapExceeded("pfq_unit needs " + std::to_string(total) + " terms");

  const Bits wp = prec + 32;
  TermRatio ratio(spec.upper, spec.lower);
  mpz_class num, den;
  Real t(1L, wp), sum(wp);
  long double abs_total = 0;
  std::vector<Real> sums;
  std::vector<double> counts;
  std::size_t next = base_terms;
  for (std::size_t n = 0; n < total; ++n) {
    sum += t;
    abs_total += std::fabs(t.to_ld());
    ratio.at(n, num, den);
    scale_by_ratio(t, num, den);
    if (n + 1 == next) {
      sums.push_back(sum);
      counts.push_back(static_cast<double>(next));
      next *= 2;
    }
  }

  const Real g = gap.to_real(wp);
  const std::size_t levels = sums.size();
  Real best(wp);
  long double best_diff = std::numeric_limits<long double>::infinity();
  Real prev = richardson_limit(std::span(sums).subspan(levels - 2), std::span(counts).subspan(levels - 2), g, wp);
  for (std::size_t k = 2; k < levels; ++k) {
    Real cur = richardson_limit(std::span(sums).subspan(levels - 1 - k),
                                std::span(counts).subspan(levels - 1 - k), g, wp);
    const long double d = std::fabs((cur - prev).to_ld());
    if (d <= best_diff) {
      best_diff = d;
      best = cur;
    }
    prev = std::move(cur);
  }
  const long double rounding = rounding_bound(abs_total, prec, 1e3L * static_cast<long double>(total));
  return AppValue(best.rounded(prec), best_diff + rounding, Rigor::heuristic);
}

}  // namespace hyperforge
