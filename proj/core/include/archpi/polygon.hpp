#pragma once

#include <cstdint>
#include <string>

#include "archpi/interval.hpp"

namespace archpi {

/// Largest supported doubling count; n = 3·2^k must fit in 64 bits.
inline constexpr int kMaxDoublings = 60;

/// Certified cosine and sine of the half-angle 180/n degrees of a regular
/// n-gon, n = 3·2^k. The angle itself is never stored as a number; only
/// the side count labels it.
struct AngleState {
  int doublings = 0;
  std::uint64_t sides = 3;
  Interval cos;
  Interval sin;

  int precision() const { return cos.precision(); }
  /// "180/n", the angle in degrees as a label.
  std::string angle_label() const;
};

/// Enclosures of the inscribed (c_n) and circumscribed (C_n) perimeters
/// of regular n-gons around a circle of unit diameter.
struct PolygonBounds {
  int doublings = 0;
  std::uint64_t sides = 3;
  Interval lower;  // c_n = n sin(180/n)
  Interval upper;  // C_n = n tan(180/n)
  int working_precision = 0;
};

/// n = 3: cos 60° = 1/2 exactly, sin 60° = sqrt(3/4).
AngleState seed_state(int precision);

/// n -> 2n. cos(x/2) = sqrt((1 + cos x)/2), sin(x/2) = sin x / (2 cos(x/2)).
/// Throws PrecisionExhausted when the enclosures stop being informative
/// (cos.lo <= 0, cos.hi >= 1 or sin.lo <= 0).
AngleState halve_angle(const AngleState& state);

/// sin x = sqrt(1 - cos^2 x). Cancellation makes this widen quickly as
/// the angle shrinks; kept as an independent cross-check of halve_angle.
Interval direct_sine(const AngleState& state);

/// c_n = n·sin, C_n = n·sin/cos. Throws PrecisionExhausted if cos holds 0.
PolygonBounds perimeters(const AngleState& state);

struct BoundsOptions {
  int max_precision = 10000;
};

/// Seed plus k halvings. Both enclosures are narrower than 10^(-digits);
/// working precision starts at digits + 10 + k and doubles until that
/// holds. Throws ResourceLimit past options.max_precision.
PolygonBounds bounds_at(int doublings, int digits, const BoundsOptions& options = {});

/// 3·2^k.
std::uint64_t sides_for(int doublings);

}  // namespace archpi
