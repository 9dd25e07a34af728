#include "archpi/rational.hpp"

#include <stdexcept>
#include <utility>

namespace archpi {

Integer pow10(int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow10: negative exponent");
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

Integer isqrt_floor(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt_floor: negative argument");
  if (sgn(n) == 0) return 0;
  // Start at a power of two that is >= sqrt(n); Newton then decreases
  // monotonically to floor(sqrt(n)).
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x;
  mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
  while (true) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  return x;
}

Integer isqrt_ceil(const Integer& n) {
  Integer r = isqrt_floor(n);
  if (r * r != n) ++r;
  return r;
}

Integer div_floor(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw std::domain_error("div_floor: division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer div_ceil(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw std::domain_error("div_ceil: division by zero");
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational::Rational(long value) : value_(value) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Integer Rational::floor() const { return div_floor(num(), den()); }

Integer Rational::ceil() const { return div_ceil(num(), den()); }

std::string Rational::str() const { return num().get_str() + "/" + den().get_str(); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ + b.value_));
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ - b.value_));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.value_ * b.value_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (sgn(b.value_) == 0) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Integer scaled_mantissa(const Rational& q, int digits, Rounding mode) {
  const Integer scaled = q.num() * pow10(digits);
  switch (mode) {
    case Rounding::Floor:
      return div_floor(scaled, q.den());
    case Rounding::Ceil:
      return div_ceil(scaled, q.den());
    case Rounding::NearestEven: {
      Integer down = div_floor(scaled, q.den());
      // Compare the remainder against half the denominator.
      const Integer twice_rem = 2 * (scaled - down * q.den());
      const int c = cmp(twice_rem, q.den());
      if (c > 0 || (c == 0 && mpz_odd_p(down.get_mpz_t()))) ++down;
      return down;
    }
  }
  throw std::logic_error("scaled_mantissa: bad rounding mode");
}

std::string format_fixed(const Integer& mantissa, int scale) {
  if (scale < 0) throw std::invalid_argument("format_fixed: negative scale");
  const bool negative = sgn(mantissa) < 0;
  std::string digits = Integer(abs(mantissa)).get_str();
  const auto width = static_cast<std::size_t>(scale);
  if (digits.size() <= width) digits.insert(0, width + 1 - digits.size(), '0');
  if (scale > 0) digits.insert(digits.size() - width, 1, '.');
  return negative ? "-" + digits : digits;
}

std::string to_decimal(const Rational& q, int digits, Rounding mode) {
  return format_fixed(scaled_mantissa(q, digits, mode), digits);
}

Rational pi_reference() { return Rational(Integer("3141592653589"), pow10(12)); }

}  // namespace archpi
