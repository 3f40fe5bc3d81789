#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace hyperforge {

using Bits = mpfr_prec_t;

// Multiprecision real. Every value owns its precision; binary operations
// produce a result at the larger of the two operand precisions.
class Real {
 public:
  explicit Real(Bits prec = 64);
  Real(long value, Bits prec);
  Real(int value, Bits prec) : Real(static_cast<long>(value), prec) {}
  Real(unsigned long value, Bits prec);
  Real(double value, Bits prec);
  Real(long double value, Bits prec);
  Real(const mpz_class& value, Bits prec);
  Real(const mpq_class& value, Bits prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  // Accepts anything mpfr_set_str understands in base 10.
  static Real parse(std::string_view text, Bits prec);

  Bits precision() const { return mpfr_get_prec(v_); }
  Real rounded(Bits prec) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_ld() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;
  // Enough digits to round-trip a value of `bits` precision.
  std::string to_string_bits(Bits bits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);
  Real operator-() const;

 private:
  void widen_to(Bits prec);
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator-(long a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator/(long a, const Real& b);
inline Real operator+(long a, const Real& b) { return b + a; }

std::partial_ordering operator<=>(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, long b);
bool operator==(const Real& a, long b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real acosh(const Real& x);
Real acos(const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real ldexp(const Real& x, long e);
Real gamma(const Real& x);
// Exponential integral Ei; for negative arguments this is -E1(-x).
Real eint(const Real& x);
Real const_pi(Bits prec);
Real const_euler(Bits prec);
Real const_log2(Bits prec);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

class Complex {
 public:
  explicit Complex(Bits prec = 64) : re(prec), im(prec) {}
  Complex(Real r);
  Complex(Real r, Real i);

  Bits precision() const;
  Complex rounded(Bits prec) const;
  bool is_real() const { return im.is_zero(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);
  Complex operator-() const;

  Real re;
  Real im;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator-(const Real& a, const Complex& b);

Real abs(const Complex& z);
// Principal argument in (-pi, pi]; a signed zero imaginary part counts as +0.
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long n);
Complex pow(const Complex& z, const Real& r);
Complex polar(const Real& modulus, const Real& angle);
// exp(2 pi i k / n)
Complex root_of_unity(long k, long n, Bits prec);

enum class Rigor { rigorous, heuristic };

inline Rigor weakest(Rigor a, Rigor b) {
  return (a == Rigor::heuristic || b == Rigor::heuristic) ? Rigor::heuristic
                                                          : Rigor::rigorous;
}

const char* to_string(Rigor r);

// A value with an absolute error bound; `rigor` says whether the bound is
// proved or estimated.
struct AppValue {
  AppValue() = default;
  AppValue(Complex v, long double e, Rigor r = Rigor::rigorous)
      : value(std::move(v)), err(e), rigor(r) {}
  AppValue(Real v, long double e, Rigor r = Rigor::rigorous)
      : value(std::move(v)), err(e), rigor(r) {}

  const Real& real() const { return value.re; }

  Complex value;
  long double err = 0.0L;
  Rigor rigor = Rigor::rigorous;
};

// Error bound for `ops` roundings on a quantity of size `magnitude`.
long double rounding_bound(long double magnitude, Bits prec, long double ops = 1);

struct PrecisionContext {
  PrecisionContext() = default;
  explicit PrecisionContext(unsigned working, unsigned guard = 64,
                            std::size_t term_cap = 10'000'000);

  Bits compute_bits() const { return working_bits + guard_bits; }
  // Truncation target 2^-working_bits.
  long double target() const;
  PrecisionContext with_working_bits(unsigned bits) const;
  PrecisionContext with_max_terms(std::size_t cap) const;

  unsigned working_bits = 128;
  unsigned guard_bits = 64;
  std::size_t max_terms = 10'000'000;
};

}  // namespace hyperforge
