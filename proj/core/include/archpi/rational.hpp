#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace archpi {

using Integer = mpz_class;

/// 10^exponent as an unbounded integer. exponent must be non-negative.
Integer pow10(int exponent);

/// floor(sqrt(n)) by Newton iteration; n must be non-negative.
Integer isqrt_floor(const Integer& n);
/// ceil(sqrt(n)); n must be non-negative.
Integer isqrt_ceil(const Integer& n);

/// floor(a / b) and ceil(a / b) for b != 0, any signs.
Integer div_floor(const Integer& a, const Integer& b);
Integer div_ceil(const Integer& a, const Integer& b);

/// Exact ratio of unbounded integers, always stored reduced with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value);  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument when den == 0.
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  Integer floor() const;
  Integer ceil() const;

  /// "num/den"; the denominator is always printed, so 3 renders as "3/1".
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

Rational abs(const Rational& q);

/// Rounding rule used when an exact value is cut to a fixed number of
/// decimal places.
enum class Rounding { Floor, Ceil, NearestEven };

/// Integer mantissa m with m·10^(-digits) the rounding of q.
Integer scaled_mantissa(const Rational& q, int digits, Rounding mode);

/// Renders mantissa·10^(-scale) with exactly `scale` fractional digits.
std::string format_fixed(const Integer& mantissa, int scale);

/// q rounded to `digits` fractional digits, rendered.
std::string to_decimal(const Rational& q, int digits, Rounding mode);

/// The 12-decimal reference value 3.141592653589 of pi. Used for reports
/// and checks only; no bound computation depends on it.
Rational pi_reference();

}  // namespace archpi
