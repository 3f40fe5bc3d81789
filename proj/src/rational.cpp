#include "hyperforge/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hyperforge {

ExactRational::ExactRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  q_ = mpq_class(num, 1) / mpq_class(den, 1);
  q_.canonicalize();
}

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

ExactRational::ExactRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

namespace {

mpz_class parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("bad integer: " + std::string(s));
    }
  }
  std::string t(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(t, 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

ExactRational parse_decimal(std::string_view s) {
  std::size_t epos = s.find_first_of("eE");
  long exponent = 0;
  if (epos != std::string_view::npos) {
    mpz_class e = parse_integer(s.substr(epos + 1));
    if (!e.fits_slong_p() || abs(e) > 100000) throw std::invalid_argument("exponent too large");
    exponent = e.get_si();
    s = s.substr(0, epos);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  std::size_t dot = s.find('.');
  std::string digits;
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    exponent -= static_cast<long>(s.size() - dot - 1);
  }
  if (digits.empty()) throw std::invalid_argument("no digits");
  mpz_class mantissa = parse_integer(digits);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return ExactRational(mpz_class(mantissa * pow10(exponent)), mpz_class(1));
  return ExactRational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
}

}  // namespace

ExactRational ExactRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    return ExactRational(num, den);
  }
  return parse_decimal(text);
}

std::string ExactRational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_str();
}

ExactRational ExactRational::pow(long n) const {
  mpz_class num, den;
  unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), e);
  if (n < 0) std::swap(num, den);
  return ExactRational(num, den);
}

ExactRational& ExactRational::operator+=(const ExactRational& o) {
  q_ += o.q_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
  q_ -= o.q_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
  q_ *= o.q_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.q_ == 0) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

mpz_class binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactRational pochhammer(const ExactRational& a, unsigned long n) {
  mpq_class r(1);
  mpq_class x = a.raw();
  for (unsigned long i = 0; i < n; ++i) {
    r *= x;
    x += 1;
  }
  return ExactRational(r);
}

}  // namespace hyperforge
