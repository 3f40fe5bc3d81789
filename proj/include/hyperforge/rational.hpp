#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hyperforge/precision.hpp"

namespace hyperforge {

// Exact rational, always in lowest terms with positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(long num, long den);
  ExactRational(const mpz_class& num, const mpz_class& den);
  explicit ExactRational(const mpq_class& q);

  // "p/q", integers, and decimals such as "-0.125" or "1e-2".
  static ExactRational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  Real to_real(Bits prec) const { return Real(q_, prec); }
  std::string to_string() const;
  ExactRational pow(long n) const;

  ExactRational operator-() const { return ExactRational(mpq_class(-q_)); }
  ExactRational& operator+=(const ExactRational& o);
  ExactRational& operator-=(const ExactRational& o);
  ExactRational& operator*=(const ExactRational& o);
  ExactRational& operator/=(const ExactRational& o);

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

ExactRational operator+(ExactRational a, const ExactRational& b);
ExactRational operator-(ExactRational a, const ExactRational& b);
ExactRational operator*(ExactRational a, const ExactRational& b);
ExactRational operator/(ExactRational a, const ExactRational& b);

// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
mpz_class binomial(long n, long k);
mpz_class factorial(unsigned long n);
// Rising factorial (a)_n.
ExactRational pochhammer(const ExactRational& a, unsigned long n);

}  // namespace hyperforge
