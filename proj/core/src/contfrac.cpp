#include "archpi/contfrac.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "archpi/errors.hpp"

namespace archpi {

std::string ContinuedFraction::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i == 1) out += ';';
    if (i > 1) out += ',';
    out += coeffs[i].get_str();
  }
  out += ']';
  return out;
}

Rational parse_decimal(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  int fraction_digits = 0;
  bool seen_point = false;
  for (const char c : text) {
    if (c == '.') {
      if (seen_point) throw MalformedDecimal("more than one decimal point in \"" + original + "\"");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) ++fraction_digits;
    } else {
      throw MalformedDecimal("unexpected character in \"" + original + "\"");
    }
  }
  if (digits.empty()) throw MalformedDecimal("no digits in \"" + original + "\"");
  const Integer mantissa(digits, 10);
  if (negative || sgn(mantissa) == 0) throw NonPositiveValue("\"" + original + "\" is not positive");
  return Rational(mantissa, pow10(fraction_digits));
}

ContinuedFraction expand(const Rational& q) {
  if (q.sign() <= 0) throw NonPositiveValue("continued fraction expansion needs a positive value");
  ContinuedFraction cf;
  Integer num = q.num();
  Integer den = q.den();
  while (sgn(den) != 0) {
    Integer a = num / den;  // both positive: truncation is floor
    Integer rem = num - a * den;
    cf.coeffs.push_back(std::move(a));
    num = std::move(den);
    den = std::move(rem);
  }
  return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  std::vector<Convergent> out;
  out.reserve(cf.coeffs.size());
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  for (std::size_t i = 0; i < cf.coeffs.size(); ++i) {
    const Integer& a = cf.coeffs[i];
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    out.push_back(Convergent{Rational(h, k), i});
    h_prev2 = std::exchange(h_prev, std::move(h));
    k_prev2 = std::exchange(k_prev, std::move(k));
  }
  return out;
}

Rational reconstruct(const ContinuedFraction& cf) {
  if (cf.coeffs.empty()) throw std::invalid_argument("reconstruct: empty continued fraction");
  Rational value(cf.coeffs.back());
  for (auto it = cf.coeffs.rbegin() + 1; it != cf.coeffs.rend(); ++it) {
    value = Rational(*it) + Rational(1) / value;
  }
  return value;
}

Rational bound_decimal(const PolygonBounds& bounds, BoundSide side, int digits) {
  if (digits < 1) throw std::invalid_argument("bound_decimal: digits must be >= 1");
  if (side == BoundSide::Lower) {
    return Rational(scaled_mantissa(bounds.lower.lo(), digits, Rounding::Floor), pow10(digits));
  }
  return Rational(scaled_mantissa(bounds.upper.hi(), digits, Rounding::Ceil), pow10(digits));
}

namespace {

// Annotates every convergent and marks the largest-denominator one that is
// under the cap and certified on `wanted`.
std::vector<CandidateVerdict> judge(const ContinuedFraction& cf, const Interval& enclosure,
                                    Side wanted, const Integer& den_cap) {
  std::vector<CandidateVerdict> verdicts;
  std::size_t best = verdicts.max_size();
  for (Convergent& c : convergents(cf)) {
    CandidateVerdict v{std::move(c), Side::Within, false, false};
    v.side = side_of(v.convergent.value, enclosure);
    v.within_cap = v.convergent.value.den() <= den_cap;
    if (v.within_cap && v.side == wanted) best = verdicts.size();
    verdicts.push_back(std::move(v));
  }
  if (best < verdicts.size()) verdicts[best].selected = true;
  return verdicts;
}

const Rational* selected(const std::vector<CandidateVerdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (v.selected) return &v.convergent.value;
  }
  return nullptr;
}

}  // namespace

RationalBounds certified_rational_bounds(int doublings, int digits, const Integer& den_cap,
                                         const BoundsOptions& options) {
  if (den_cap < 1) throw std::invalid_argument("den_cap must be >= 1");
  PolygonBounds polygon = bounds_at(doublings, digits, options);

  RationalBounds result;
  result.lower_decimal = bound_decimal(polygon, BoundSide::Lower, digits);
  result.upper_decimal = bound_decimal(polygon, BoundSide::Upper, digits);
  result.lower_expansion = expand(result.lower_decimal);
  result.upper_expansion = expand(result.upper_decimal);
  result.lower_candidates = judge(result.lower_expansion, polygon.lower, Side::Below, den_cap);
  result.upper_candidates = judge(result.upper_expansion, polygon.upper, Side::Above, den_cap);

  const Rational* lower = selected(result.lower_candidates);
  const Rational* upper = selected(result.upper_candidates);
  if (lower == nullptr) {
    throw NoValidBound("no convergent with denominator <= " + den_cap.get_str() +
                       " lies certifiably below c_" + std::to_string(polygon.sides));
  }
  if (upper == nullptr) {
    throw NoValidBound("no convergent with denominator <= " + den_cap.get_str() +
                       " lies certifiably above C_" + std::to_string(polygon.sides));
  }
  result.lower = *lower;
  result.upper = *upper;
  result.polygon = std::move(polygon);
  return result;
}

}  // namespace archpi
