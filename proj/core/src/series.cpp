#include "archpi/series.hpp"

#include <stdexcept>

#include "archpi/errors.hpp"

namespace archpi {
namespace {

Rational leibniz(int terms) {
  Rational sum;
  for (int i = 0; i < terms; ++i) {
    const Rational term(1, 2 * i + 1);
    sum = (i % 2 == 0) ? sum + term : sum - term;
  }
  return Rational(4) * sum;
}

Rational nilakantha(int terms) {
  if (terms == 0) return Rational(0);
  Rational sum(3, 4);
  for (int j = 2; j <= terms; ++j) {
    const long m = 2L * j;
    const Rational term(1, (m - 2) * (m - 1) * m);
    sum = (j % 2 == 0) ? sum + term : sum - term;
  }
  return Rational(4) * sum;
}

Rational brouncker(int depth) {
  // Level j carries 2 + (2j+1)^2 / level_{j+1}; the deepest level is a bare 2.
  Rational four_over_pi(1);
  if (depth > 0) {
    Rational level(2);
    for (int j = depth - 1; j >= 1; --j) {
      const long odd = 2L * j + 1;
      level = Rational(2) + Rational(odd * odd) / level;
    }
    four_over_pi = four_over_pi + Rational(1) / level;
  }
  return Rational(4) / four_over_pi;
}

Rational wallis(int groups) {
  Rational product(1);
  for (long j = 1; j <= groups; ++j) {
    product = product * Rational(2 * j, 2 * j - 1) * Rational(2 * j, 2 * j + 1);
  }
  return Rational(2) * product;
}

Interval viete(int factors, int precision) {
  // Guard digits absorb the rounding of the repeated square roots.
  const int p = precision + 10;
  const Interval two = Interval::exact(2, p);
  Interval radical = interval_sqrt(two);
  Interval product = radical / two;
  for (int i = 2; i <= factors; ++i) {
    radical = interval_sqrt(two + radical);
    product = product * (radical / two);
  }
  return two / product;
}

}  // namespace

std::string_view series_name(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Leibniz:
      return "leibniz";
    case SeriesKind::Nilakantha:
      return "nilakantha";
    case SeriesKind::Brouncker:
      return "brouncker";
    case SeriesKind::Wallis:
      return "wallis";
    case SeriesKind::Viete:
      return "viete";
  }
  return "?";
}

SeriesKind parse_series_kind(std::string_view name) {
  for (const SeriesKind kind : kAllSeries) {
    if (series_name(kind) == name) return kind;
  }
  throw UnsupportedSeriesName("unknown series \"" + std::string(name) + "\"");
}

std::string SeriesEstimate::decimal(int digits) const {
  if (const auto* q = std::get_if<Rational>(&estimate)) {
    return to_decimal(*q, digits, Rounding::NearestEven);
  }
  return std::get<Interval>(estimate).nearest_decimal(digits);
}

SeriesEstimate evaluate_series(SeriesKind kind, int terms, int precision) {
  if (precision < 1) throw std::invalid_argument("evaluate_series: precision must be >= 1");
  const int min_terms = (kind == SeriesKind::Leibniz || kind == SeriesKind::Viete) ? 1 : 0;
  if (terms < min_terms) {
    throw InvalidTermCount(std::string(series_name(kind)) + " needs at least " +
                           std::to_string(min_terms) + " terms");
  }

  SeriesEstimate result;
  result.series = kind;
  result.terms = terms;
  Rational value;
  switch (kind) {
    case SeriesKind::Leibniz:
      value = leibniz(terms);
      break;
    case SeriesKind::Nilakantha:
      value = nilakantha(terms);
      break;
    case SeriesKind::Brouncker:
      value = brouncker(terms);
      break;
    case SeriesKind::Wallis:
      value = wallis(terms);
      break;
    case SeriesKind::Viete: {
      Interval enclosure = viete(terms, precision);
      value = enclosure.midpoint();
      result.estimate = std::move(enclosure);
      break;
    }
  }
  if (kind != SeriesKind::Viete) result.estimate = value;
  const Rational error = value - pi_reference();
  result.error_vs_reference = (error.sign() >= 0 ? "+" : "") + to_decimal(error, precision, Rounding::NearestEven);
  return result;
}

std::vector<SeriesEstimate> convergence_report(std::span<const SeriesKind> series, int max_terms,
                                               int precision) {
  if (max_terms < 1) throw InvalidTermCount("convergence report needs at least one term");
  std::vector<SeriesEstimate> rows;
  rows.reserve(series.size() * static_cast<std::size_t>(max_terms));
  for (const SeriesKind kind : series) {
    for (int n = 1; n <= max_terms; ++n) rows.push_back(evaluate_series(kind, n, precision));
  }
  return rows;
}

}  // namespace archpi
