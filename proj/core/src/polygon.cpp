#include "archpi/polygon.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "archpi/errors.hpp"

namespace archpi {

std::string AngleState::angle_label() const { return "180/" + std::to_string(sides); }

std::uint64_t sides_for(int doublings) {
  if (doublings < 0 || doublings > kMaxDoublings) {
    throw ResourceLimit("doubling count must lie in [0, " + std::to_string(kMaxDoublings) + "]");
  }
  return std::uint64_t{3} << doublings;
}

AngleState seed_state(int precision) {
  if (precision < 1) throw std::invalid_argument("seed_state: precision must be >= 1");
  return AngleState{
      .doublings = 0,
      .sides = 3,
      .cos = make_interval(Rational(1, 2), precision),
      .sin = interval_sqrt(make_interval(Rational(3, 4), precision)),
  };
}

AngleState halve_angle(const AngleState& state) {
  const int p = state.precision();
  const Interval one = Interval::exact(1, p);
  const Interval two = Interval::exact(2, p);

  const Interval half_sum = (one + state.cos) / two;
  if (sgn(half_sum.lo_mantissa()) <= 0) throw PrecisionExhausted("1 + cos lost its sign");
  Interval cos = interval_sqrt(half_sum);
  if (sgn(cos.lo_mantissa()) <= 0 || cos.hi_mantissa() >= pow10(p)) {
    throw PrecisionExhausted("cosine enclosure degenerated at n = " + std::to_string(2 * state.sides));
  }
  Interval sin = state.sin / scale(cos, 2);
  if (sgn(sin.lo_mantissa()) <= 0) {
    throw PrecisionExhausted("sine enclosure reached 0 at n = " + std::to_string(2 * state.sides));
  }
  return AngleState{
      .doublings = state.doublings + 1,
      .sides = sides_for(state.doublings + 1),
      .cos = std::move(cos),
      .sin = std::move(sin),
  };
}

Interval direct_sine(const AngleState& state) {
  const Interval one = Interval::exact(1, state.precision());
  Interval radicand = one - state.cos * state.cos;
  if (sgn(radicand.lo_mantissa()) < 0) {
    // cos^2 rounds above 1; clamp the lower end, sin is non-negative here.
    if (sgn(radicand.hi_mantissa()) < 0) throw PrecisionExhausted("1 - cos^2 is negative");
    radicand = Interval(0, radicand.hi_mantissa(), radicand.precision());
  }
  return interval_sqrt(radicand);
}

PolygonBounds perimeters(const AngleState& state) {
  if (sgn(state.cos.lo_mantissa()) <= 0) throw PrecisionExhausted("cosine enclosure reaches 0");
  const Integer n(std::to_string(state.sides));
  Interval lower = scale(state.sin, n);
  Interval upper = lower / state.cos;
  return PolygonBounds{
      .doublings = state.doublings,
      .sides = state.sides,
      .lower = std::move(lower),
      .upper = std::move(upper),
      .working_precision = state.precision(),
  };
}

PolygonBounds bounds_at(int doublings, int digits, const BoundsOptions& options) {
  if (digits < 1) throw std::invalid_argument("bounds_at: digits must be >= 1");
  sides_for(doublings);

  const Integer target = pow10(digits);
  int precision = digits + 10 + doublings;
  while (true) {
    if (precision > options.max_precision) {
      throw ResourceLimit("working precision would exceed " + std::to_string(options.max_precision) +
                          " digits");
    }
    try {
      AngleState state = seed_state(precision);
      for (int i = 0; i < doublings; ++i) state = halve_angle(state);
      PolygonBounds bounds = perimeters(state);
      // width < 10^-d  <=>  (hi - lo)·10^d < 10^p
      const Integer limit = pow10(precision);
      const auto narrow = [&](const Interval& iv) {
        return (iv.hi_mantissa() - iv.lo_mantissa()) * target < limit;
      };
      if (narrow(bounds.lower) && narrow(bounds.upper)) return bounds;
    } catch (const PrecisionExhausted&) {
      // fall through to escalation
    }
    if (precision == options.max_precision) precision = options.max_precision + 1;
    else precision = std::min(2 * precision, options.max_precision);
  }
}

}  // namespace archpi
