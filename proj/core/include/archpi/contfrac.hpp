#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "archpi/interval.hpp"
#include "archpi/polygon.hpp"

namespace archpi {

/// Simple continued fraction [a0; a1, ..., am] with a0 >= 0 and ai >= 1.
struct ContinuedFraction {
  std::vector<Integer> coeffs;

  /// "[3;7,7]"
  std::string str() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

struct Convergent {
  Rational value;
  std::size_t index = 0;
};

/// Exact value of a plain decimal literal: digits with an optional
/// fractional part, no exponent. "3.14" -> 157/50.
/// Throws MalformedDecimal, or NonPositiveValue for values <= 0.
Rational parse_decimal(std::string_view text);

/// Euclid's algorithm on num/den. Throws NonPositiveValue for q <= 0.
ContinuedFraction expand(const Rational& q);

/// h_i = a_i h_{i-1} + h_{i-2}, k_i = a_i k_{i-1} + k_{i-2}.
std::vector<Convergent> convergents(const ContinuedFraction& cf);

/// a0 + 1/(a1 + 1/(...)), folded from the innermost coefficient.
Rational reconstruct(const ContinuedFraction& cf);

enum class BoundSide { Lower, Upper };

/// c_n cut down (Lower) or C_n cut up (Upper) to `digits` decimals, as an
/// exact rational. The cut stays on the certified side of the enclosure.
Rational bound_decimal(const PolygonBounds& bounds, BoundSide side, int digits);

struct CandidateVerdict {
  Convergent convergent;
  Side side = Side::Within;  // against the relevant perimeter enclosure
  bool within_cap = false;
  bool selected = false;
};

struct RationalBounds {
  Rational lower;
  Rational upper;
  PolygonBounds polygon;
  Rational lower_decimal;
  Rational upper_decimal;
  ContinuedFraction lower_expansion;
  ContinuedFraction upper_expansion;
  std::vector<CandidateVerdict> lower_candidates;
  std::vector<CandidateVerdict> upper_candidates;
};

/// Rational bounds on pi from polygon enclosures at k doublings. The
/// lower bound is the largest-denominator convergent of the cut-down c_n
/// with denominator <= den_cap lying certifiably below the c_n enclosure;
/// the upper bound mirrors this on C_n. Throws NoValidBound when either
/// side has no such convergent.
RationalBounds certified_rational_bounds(int doublings, int digits, const Integer& den_cap,
                                         const BoundsOptions& options = {});

}  // namespace archpi
