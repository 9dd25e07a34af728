#include "archpi/interval.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "archpi/errors.hpp"

namespace archpi {
namespace {

void check_precision(int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
}

// Mantissa of `m` at scale `from` re-expressed at the finer scale `to`.
Integer upscale(const Integer& m, int from, int to) { return m * pow10(to - from); }

std::pair<Interval, Interval> align(const Interval& a, const Interval& b) {
  const int p = std::max(a.precision(), b.precision());
  return {a.rescaled(p), b.rescaled(p)};
}

}  // namespace

Interval::Interval(Integer lo, Integer hi, int precision)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_(precision) {
  check_precision(precision);
  if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::exact(const Integer& value, int precision) {
  check_precision(precision);
  Integer m = value * pow10(precision);
  return Interval(m, m, precision);
}

Rational Interval::lo() const { return Rational(lo_, pow10(precision_)); }

Rational Interval::hi() const { return Rational(hi_, pow10(precision_)); }

Rational Interval::width() const { return Rational(Integer(hi_ - lo_), pow10(precision_)); }

Rational Interval::midpoint() const {
  return Rational(Integer(lo_ + hi_), Integer(2 * pow10(precision_)));
}

bool Interval::contains(const Rational& q) const { return side_of(q, *this) == Side::Within; }

bool Interval::overlaps(const Interval& other) const {
  const auto [a, b] = align(*this, other);
  return a.lo_ <= b.hi_ && b.lo_ <= a.hi_;
}

bool Interval::subset_of(const Interval& outer) const {
  const auto [a, b] = align(*this, outer);
  return b.lo_ <= a.lo_ && a.hi_ <= b.hi_;
}

Interval Interval::rescaled(int precision) const {
  check_precision(precision);
  if (precision >= precision_) {
    return Interval(upscale(lo_, precision_, precision), upscale(hi_, precision_, precision),
                    precision);
  }
  const Integer divisor = pow10(precision_ - precision);
  return Interval(div_floor(lo_, divisor), div_ceil(hi_, divisor), precision);
}

std::string Interval::lo_decimal(int digits) const {
  return format_fixed(scaled_mantissa(lo(), digits, Rounding::Floor), digits);
}

std::string Interval::hi_decimal(int digits) const {
  return format_fixed(scaled_mantissa(hi(), digits, Rounding::Ceil), digits);
}

std::string Interval::nearest_decimal(int digits) const {
  return to_decimal(midpoint(), digits, Rounding::NearestEven);
}

Interval make_interval(const Rational& q, int precision) {
  check_precision(precision);
  return Interval(scaled_mantissa(q, precision, Rounding::Floor),
                  scaled_mantissa(q, precision, Rounding::Ceil), precision);
}

Interval interval_arith(ArithOp op, const Interval& a_in, const Interval& b_in) {
  const auto [a, b] = align(a_in, b_in);
  const int p = a.precision();
  switch (op) {
    case ArithOp::Add:
      return Interval(a.lo_mantissa() + b.lo_mantissa(), a.hi_mantissa() + b.hi_mantissa(), p);
    case ArithOp::Sub:
      return Interval(a.lo_mantissa() - b.hi_mantissa(), a.hi_mantissa() - b.lo_mantissa(), p);
    case ArithOp::Mul: {
      // Products live at scale 2p; cut back to p outward.
      const std::array<Integer, 4> products = {
          a.lo_mantissa() * b.lo_mantissa(), a.lo_mantissa() * b.hi_mantissa(),
          a.hi_mantissa() * b.lo_mantissa(), a.hi_mantissa() * b.hi_mantissa()};
      const auto [mn, mx] = std::minmax_element(products.begin(), products.end());
      const Integer divisor = pow10(p);
      return Interval(div_floor(*mn, divisor), div_ceil(*mx, divisor), p);
    }
    case ArithOp::Div: {
      if (b.contains_zero()) throw DivisionByZeroInterval("interval division by an interval containing 0");
      // (A/10^p) / (B/10^p) = A/B, whose mantissa at scale p is A·10^p/B.
      const Integer one = pow10(p);
      Integer lo;
      Integer hi;
      bool first = true;
      for (const Integer* num : {&a.lo_mantissa(), &a.hi_mantissa()}) {
        for (const Integer* den : {&b.lo_mantissa(), &b.hi_mantissa()}) {
          const Integer scaled = *num * one;
          Integer down = div_floor(scaled, *den);
          Integer up = div_ceil(scaled, *den);
          if (first || down < lo) lo = std::move(down);
          if (first || up > hi) hi = std::move(up);
          first = false;
        }
      }
      return Interval(std::move(lo), std::move(hi), p);
    }
  }
  throw std::logic_error("interval_arith: bad op");
}

Interval operator+(const Interval& a, const Interval& b) { return interval_arith(ArithOp::Add, a, b); }
Interval operator-(const Interval& a, const Interval& b) { return interval_arith(ArithOp::Sub, a, b); }
Interval operator*(const Interval& a, const Interval& b) { return interval_arith(ArithOp::Mul, a, b); }
Interval operator/(const Interval& a, const Interval& b) { return interval_arith(ArithOp::Div, a, b); }

Interval scale(const Interval& a, const Integer& factor) {
  Integer x = a.lo_mantissa() * factor;
  Integer y = a.hi_mantissa() * factor;
  if (x > y) std::swap(x, y);
  return Interval(std::move(x), std::move(y), a.precision());
}

Interval interval_sqrt(const Interval& a) {
  if (sgn(a.lo_mantissa()) < 0) throw NegativeRadicand("square root of an interval with negative lower end");
  // sqrt(M·10^-p) = sqrt(M·10^p)·10^-p
  const Integer one = pow10(a.precision());
  return Interval(isqrt_floor(a.lo_mantissa() * one), isqrt_ceil(a.hi_mantissa() * one),
                  a.precision());
}

Side side_of(const Rational& q, const Interval& iv) {
  const Integer lhs = q.num() * pow10(iv.precision());
  if (lhs < iv.lo_mantissa() * q.den()) return Side::Below;
  if (lhs > iv.hi_mantissa() * q.den()) return Side::Above;
  return Side::Within;
}

const char* to_string(Side side) {
  switch (side) {
    case Side::Below:
      return "Below";
    case Side::Within:
      return "Within";
    case Side::Above:
      return "Above";
  }
  return "?";
}

}  // namespace archpi
