#include "hyperforge/precision.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyperforge {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

Bits wider(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real::Real(Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, kRnd);
}

Real::Real(unsigned long value, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_ui(v_, value, kRnd);
}

Real::Real(double value, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, value, kRnd);
}

Real::Real(long double value, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_ld(v_, value, kRnd);
}

Real::Real(const mpz_class& value, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), kRnd);
}

Real::Real(const mpq_class& value, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get_mpq_t(), kRnd);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::parse(std::string_view text, Bits prec) {
  Real r(prec);
  std::string s(text);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, kRnd) != 0) {
    throw std::invalid_argument("not a decimal number: " + s);
  }
  return r;
}

Real Real::rounded(Bits prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Real::to_string_bits(Bits bits) const {
  return to_string(1 + static_cast<int>(std::ceil(bits * 0.30102999566398120)));
}

void Real::widen_to(Bits prec) {
  if (prec > precision()) mpfr_prec_round(v_, prec, kRnd);
}

Real& Real::operator+=(const Real& o) {
  widen_to(o.precision());
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen_to(o.precision());
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen_to(o.precision());
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen_to(o.precision());
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), kRnd);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), kRnd);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), kRnd);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.get(), a.get(), b.get(), kRnd);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.get(), a.get(), b, kRnd);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.get(), a.get(), b, kRnd);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), kRnd);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.get(), a.get(), b, kRnd);
  return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.get(), a.get(), b, kRnd);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.get(), a, b.get(), kRnd);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.get(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, long b) {
  return !mpfr_nan_p(a.get()) && mpfr_cmp_si(a.get(), b) == 0;
}

#define HYPERFORGE_UNARY(name, fn)          \
  Real name(const Real& x) {                \
    Real r(x.precision());                  \
    fn(r.get(), x.get(), kRnd);             \
    return r;                               \
  }

HYPERFORGE_UNARY(abs, mpfr_abs)
HYPERFORGE_UNARY(sqrt, mpfr_sqrt)
HYPERFORGE_UNARY(cbrt, mpfr_cbrt)
HYPERFORGE_UNARY(log, mpfr_log)
HYPERFORGE_UNARY(log1p, mpfr_log1p)
HYPERFORGE_UNARY(exp, mpfr_exp)
HYPERFORGE_UNARY(sin, mpfr_sin)
HYPERFORGE_UNARY(cos, mpfr_cos)
HYPERFORGE_UNARY(acosh, mpfr_acosh)
HYPERFORGE_UNARY(acos, mpfr_acos)
HYPERFORGE_UNARY(gamma, mpfr_gamma)
HYPERFORGE_UNARY(eint, mpfr_eint)

#undef HYPERFORGE_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

Real const_pi(Bits prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

Real const_euler(Bits prec) {
  Real r(prec);
  mpfr_const_euler(r.get(), kRnd);
  return r;
}

Real const_log2(Bits prec) {
  Real r(prec);
  mpfr_const_log2(r.get(), kRnd);
  return r;
}

Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex::Complex(Real r) : re(std::move(r)), im(re.precision()) {}

Complex::Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

Bits Complex::precision() const { return std::max(re.precision(), im.precision()); }

Complex Complex::rounded(Bits prec) const { return Complex(re.rounded(prec), im.rounded(prec)); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  if (o.im.is_zero()) {
    re *= o.re;
    im *= o.re;
    return *this;
  }
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.im.is_zero()) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Real& o) {
  re /= o;
  im /= o;
  return *this;
}

Complex Complex::operator-() const { return Complex(-re, -im); }

Complex operator+(const Complex& a, const Complex& b) {
  Complex r(a);
  r += b;
  return r;
}

Complex operator-(const Complex& a, const Complex& b) {
  Complex r(a);
  r -= b;
  return r;
}

Complex operator*(const Complex& a, const Complex& b) {
  Complex r(a);
  r *= b;
  return r;
}

Complex operator/(const Complex& a, const Complex& b) {
  Complex r(a);
  r /= b;
  return r;
}

Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Real& a, const Complex& b) { return b * a; }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }
Complex operator+(const Complex& a, const Real& b) { return Complex(a.re + b, a.im); }
Complex operator-(const Complex& a, const Real& b) { return Complex(a.re - b, a.im); }
Complex operator-(const Real& a, const Complex& b) { return Complex(a - b.re, -b.im); }

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Real arg(const Complex& z) {
  if (z.im.is_zero()) {
    Real zero(z.precision());
    return atan2(zero, z.re);
  }
  return atan2(z.im, z.re);
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  if (z.im.is_zero()) return Complex(m, Real(z.precision()));
  return Complex(m * cos(z.im), m * sin(z.im));
}

Complex log(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() > 0) return Complex(log(z.re), Real(z.precision()));
  return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() >= 0) return Complex(sqrt(z.re), Real(z.precision()));
  Real m = abs(z);
  Real a = sqrt((m + z.re) / 2);
  Real b = sqrt((m - z.re) / 2);
  if (z.im.sign() < 0) b = -b;
  return Complex(a, b);
}

Complex pow(const Complex& z, long n) {
  if (z.im.is_zero()) return Complex(pow(z.re, n), Real(z.precision()));
  bool invert = n < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  Complex result(Real(1L, z.precision()));
  Complex base(z);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  if (invert) return Complex(Real(1L, z.precision())) / result;
  return result;
}

Complex pow(const Complex& z, const Real& r) {
  if (z.is_zero()) return Complex(z.precision());
  if (z.im.is_zero() && z.re.sign() > 0) return Complex(pow(z.re, r), Real(z.precision()));
  Complex l = log(z);
  return exp(Complex(l.re * r, l.im * r));
}

Complex polar(const Real& modulus, const Real& angle) {
  return Complex(modulus * cos(angle), modulus * sin(angle));
}

Complex root_of_unity(long k, long n, Bits prec) {
  long m = ((k % n) + n) % n;
  if (m == 0) return Complex(Real(1L, prec));
  if (2 * m == n) return Complex(Real(-1L, prec));
  Real angle = const_pi(prec) * (2 * m) / n;
  return Complex(cos(angle), sin(angle));
}

const char* to_string(Rigor r) { return r == Rigor::rigorous ? "rigorous" : "heuristic"; }

long double rounding_bound(long double magnitude, Bits prec, long double ops) {
  return std::fabs(magnitude) * ops * std::ldexp(1.0L, static_cast<int>(1 - prec));
}

PrecisionContext::PrecisionContext(unsigned working, unsigned guard, std::size_t term_cap)
    : working_bits(working), guard_bits(guard), max_terms(term_cap) {
  if (working_bits < 64) throw std::invalid_argument("working_bits must be at least 64");
  if (guard_bits < 1) throw std::invalid_argument("guard_bits must be positive");
  if (max_terms < 16) throw std::invalid_argument("max_terms must be at least 16");
}

long double PrecisionContext::target() const {
  return std::ldexp(1.0L, -static_cast<int>(working_bits));
}

PrecisionContext PrecisionContext::with_working_bits(unsigned bits) const {
  return PrecisionContext(bits, guard_bits, max_terms);
}

PrecisionContext PrecisionContext::with_max_terms(std::size_t cap) const {
  return PrecisionContext(working_bits, guard_bits, cap);
}

}  // namespace hyperforge
