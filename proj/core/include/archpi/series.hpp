#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "archpi/interval.hpp"

namespace archpi {

/// Classical representations of pi, each turned into a pi estimate:
///   leibniz     pi/4 = 1 - 1/3 + 1/5 - ...            (N summands)
///   nilakantha  pi/4 = 3/4 + 1/(2·3·4) - 1/(4·5·6) ... (3/4 is term 1)
///   brouncker   4/pi = 1 + 1²/(2 + 3²/(2 + ...))      (N levels below 1)
///   wallis      pi/2 = (2/1·2/3)(4/3·4/5)...          (N factor pairs)
///   viete       2/pi = √2/2 · √(2+√2)/2 · ...         (N radical factors)
enum class SeriesKind { Leibniz, Nilakantha, Brouncker, Wallis, Viete };

inline constexpr SeriesKind kAllSeries[] = {SeriesKind::Leibniz, SeriesKind::Nilakantha,
                                            SeriesKind::Brouncker, SeriesKind::Wallis,
                                            SeriesKind::Viete};

std::string_view series_name(SeriesKind kind);
/// Throws UnsupportedSeriesName.
SeriesKind parse_series_kind(std::string_view name);

struct SeriesEstimate {
  SeriesKind series = SeriesKind::Leibniz;
  int terms = 0;
  /// Exact for the rational series; an enclosure for viete.
  std::variant<Rational, Interval> estimate;
  /// estimate - pi_reference() rounded to nearest at the report precision
  /// (midpoint for enclosures).
  std::string error_vs_reference;

  bool is_exact() const { return std::holds_alternative<Rational>(estimate); }
  /// Estimate rounded to nearest at `digits` decimals.
  std::string decimal(int digits) const;
};

/// Throws InvalidTermCount when terms < 0 (terms < 1 for leibniz and viete)
/// and std::invalid_argument when precision < 1.
SeriesEstimate evaluate_series(SeriesKind kind, int terms, int precision);

/// One row per (series, N) for N = 1..max_terms, in the order given.
std::vector<SeriesEstimate> convergence_report(std::span<const SeriesKind> series, int max_terms,
                                               int precision);

}  // namespace archpi
