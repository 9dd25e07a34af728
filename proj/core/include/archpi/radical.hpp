#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "archpi/interval.hpp"

namespace archpi {

enum class RadicalSign { Plus, Minus };

/// sqrt(2 ± sqrt(2 ± ... sqrt(3))). `signs` runs from the outermost radical
/// inward; an empty list is the bare leaf sqrt(3).
struct NestedRadical {
  std::vector<RadicalSign> signs;

  /// R_0 = sqrt(3), R_j = sqrt(2 + R_{j-1}).
  static NestedRadical tower(int depth);
  /// sqrt(2 ± R).
  NestedRadical wrapped(RadicalSign sign) const;

  friend bool operator==(const NestedRadical&, const NestedRadical&) = default;
};

/// multiplier · numerator / denominator, the closed forms of c_n and C_n.
/// A missing numerator stands for 1; the denominator is either absent, an
/// integer, or another radical.
struct RadicalExpr {
  Integer multiplier = 1;
  std::optional<NestedRadical> numerator;
  std::variant<std::monostate, Integer, NestedRadical> denominator;

  friend bool operator==(const RadicalExpr&, const RadicalExpr&) = default;
};

enum class Perimeter { Inscribed, Circumscribed };

/// Closed form of c_n (Inscribed) or C_n (Circumscribed). n = 3 and n = 6
/// are the literal forms 3√3/2, 3√3, 3 and 2√3; from n = 12 on the tower
/// n·√(2 − R)/2 and n·√(2 − R)/√(2 + R). Throws UnsupportedSideCount
/// unless n = 3·2^k.
RadicalExpr nested_radical_form(std::uint64_t sides, Perimeter which);

/// UTF-8 rendering, e.g. "24·√(2−√(2+√3))/√(2+√(2+√3))".
std::string render(const RadicalExpr& expr);
std::string render(const NestedRadical& radical);

/// Inverse of render. Also accepts ASCII '-' for the minus sign and an
/// omitted '·'. Throws MalformedRadical.
RadicalExpr parse_radical(std::string_view text);

Interval eval_radical(const NestedRadical& radical, int precision);
Interval eval_radical(const RadicalExpr& expr, int precision);

}  // namespace archpi
