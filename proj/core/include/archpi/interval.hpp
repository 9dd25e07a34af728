#pragma once

#include <string>

#include "archpi/rational.hpp"

namespace archpi {

/// Closed interval [lo, hi] whose endpoints are fixed-point numbers
/// mantissa·10^(-precision). Every operation rounds lo toward -inf and hi
/// toward +inf, so the exact result always lies inside.
class Interval {
 public:
  /// [0, 0] at one digit.
  Interval() = default;
  /// Throws std::invalid_argument if lo > hi or precision < 1.
  Interval(Integer lo, Integer hi, int precision);

  /// Degenerate interval at an exactly representable integer value.
  static Interval exact(const Integer& value, int precision);

  const Integer& lo_mantissa() const { return lo_; }
  const Integer& hi_mantissa() const { return hi_; }
  int precision() const { return precision_; }

  Rational lo() const;
  Rational hi() const;
  Rational width() const;
  Rational midpoint() const;

  bool contains(const Rational& q) const;
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
  bool overlaps(const Interval& other) const;
  /// True when this interval lies inside `outer`.
  bool subset_of(const Interval& outer) const;

  /// Same value set re-expressed at `precision` digits, rounded outward
  /// when the scale shrinks.
  Interval rescaled(int precision) const;

  /// Endpoints cut to `digits` decimals, outward.
  std::string lo_decimal(int digits) const;
  std::string hi_decimal(int digits) const;
  /// Midpoint rounded to nearest at `digits` decimals. Not certified; for
  /// display next to the enclosure.
  std::string nearest_decimal(int digits) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Integer lo_;
  Integer hi_;
  int precision_ = 1;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Enclosure of q at `precision` digits: width at most 10^(-precision),
/// degenerate when q is representable. Throws std::invalid_argument if
/// precision < 1.
Interval make_interval(const Rational& q, int precision);

/// Operands at different precisions are combined at the finer one.
/// Throws DivisionByZeroInterval when dividing by an interval holding 0.
Interval interval_arith(ArithOp op, const Interval& a, const Interval& b);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);

/// Exact multiplication by an integer.
Interval scale(const Interval& a, const Integer& factor);

/// Encloses sqrt(x) for every x in a. Throws NegativeRadicand if a.lo < 0.
Interval interval_sqrt(const Interval& a);

enum class Side { Below, Within, Above };

/// Below iff q < lo, Above iff q > hi. Within means the comparison is not
/// certified at this precision.
Side side_of(const Rational& q, const Interval& iv);

const char* to_string(Side side);

}  // namespace archpi
