#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "archpi/contfrac.hpp"
#include "archpi/errors.hpp"
#include "archpi/interval.hpp"
#include "archpi/polygon.hpp"
#include "archpi/radical.hpp"
#include "archpi/series.hpp"

namespace archpi::cli {
namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return Format::Text;
}

// Code points, not bytes: the closed forms contain multi-byte UTF-8.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(std::string s, std::size_t width) {
  const std::size_t w = display_width(s);
  if (w < width) s.append(width - w, ' ');
  return s;
}

// Left-aligned columns separated by two spaces; trailing blanks trimmed.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      line += i + 1 == row.size() ? row[i] : pad(row[i], widths[i]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct Enclosure {
  std::string approx;
  std::string lo;
  std::string hi;
};

Enclosure describe(const Interval& iv, int digits) {
  return Enclosure{iv.nearest_decimal(digits), iv.lo_decimal(digits), iv.hi_decimal(digits)};
}

json to_json(const Enclosure& e) { return json{{"approx", e.approx}, {"lo", e.lo}, {"hi", e.hi}}; }

std::string bracket(const Enclosure& e) { return "[" + e.lo + ", " + e.hi + "]"; }

struct PerimeterRow {
  int doublings = 0;
  std::uint64_t sides = 0;
  int working_precision = 0;
  Enclosure inscribed;
  Enclosure circumscribed;
};

PerimeterRow perimeter_row(const PolygonBounds& bounds, int digits) {
  return PerimeterRow{bounds.doublings, bounds.sides, bounds.working_precision,
                      describe(bounds.lower, digits), describe(bounds.upper, digits)};
}

json cf_json(const ContinuedFraction& cf) {
  json coeffs = json::array();
  for (const auto& a : cf.coeffs) coeffs.push_back(a.get_str());
  return coeffs;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  int doublings = 5;
  int digits = 8;
  std::string format = "text";
};

void cmd_bounds(const BoundsArgs& a, const BoundsOptions& opts, std::ostream& out) {
  const PolygonBounds bounds = bounds_at(a.doublings, a.digits, opts);
  const PerimeterRow row = perimeter_row(bounds, a.digits);
  switch (parse_format(a.format)) {
    case Format::Text:
      out << "n = " << row.sides << "  (k = " << row.doublings << ", half-angle 180/" << row.sides
          << " degrees, " << a.digits << " digits)\n";
      print_table(out, {{"c_n", row.inscribed.approx, bracket(row.inscribed)},
                        {"C_n", row.circumscribed.approx, bracket(row.circumscribed)}});
      break;
    case Format::Csv:
      out << "n,c_lo,c_hi,C_lo,C_hi\n";
      out << row.sides << ',' << row.inscribed.lo << ',' << row.inscribed.hi << ','
          << row.circumscribed.lo << ',' << row.circumscribed.hi << '\n';
      break;
    case Format::Json:
      print_json(out, json{{"command", "bounds"},
                           {"parameters", {{"doublings", a.doublings}, {"digits", a.digits}}},
                           {"results",
                            {{"n", row.sides},
                             {"c_n", to_json(row.inscribed)},
                             {"C_n", to_json(row.circumscribed)}}}});
      break;
  }
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  int max_doublings = 5;
  int digits = 8;
  std::string format = "text";
};

void cmd_table(const TableArgs& a, const BoundsOptions& opts, std::ostream& out) {
  struct Line {
    PerimeterRow row;
    std::string c_form;
    std::string C_form;
  };
  std::vector<Line> lines;
  for (int k = 0; k <= a.max_doublings; ++k) {
    const PolygonBounds bounds = bounds_at(k, a.digits, opts);
    lines.push_back(Line{perimeter_row(bounds, a.digits),
                         render(nested_radical_form(bounds.sides, Perimeter::Inscribed)),
                         render(nested_radical_form(bounds.sides, Perimeter::Circumscribed))});
  }

  switch (parse_format(a.format)) {
    case Format::Text: {
      std::vector<std::vector<std::string>> rows{
          {"n", "c_n = n sin(180/n)", "c_n", "c_n enclosure", "C_n = n tan(180/n)", "C_n", "C_n enclosure"}};
      for (const auto& l : lines) {
        rows.push_back({std::to_string(l.row.sides), l.c_form, l.row.inscribed.approx, bracket(l.row.inscribed),
                        l.C_form, l.row.circumscribed.approx, bracket(l.row.circumscribed)});
      }
      print_table(out, rows);
      break;
    }
    case Format::Csv:
      out << "n,c_form,c_n,c_lo,c_hi,C_form,C_n,C_lo,C_hi\n";
      for (const auto& l : lines) {
        out << l.row.sides << ',' << l.c_form << ',' << l.row.inscribed.approx << ',' << l.row.inscribed.lo
            << ',' << l.row.inscribed.hi << ',' << l.C_form << ',' << l.row.circumscribed.approx << ','
            << l.row.circumscribed.lo << ',' << l.row.circumscribed.hi << '\n';
      }
      break;
    case Format::Json: {
      json rows = json::array();
      for (const auto& l : lines) {
        rows.push_back(json{{"n", l.row.sides},
                            {"c_form", l.c_form},
                            {"c_n", to_json(l.row.inscribed)},
                            {"C_form", l.C_form},
                            {"C_n", to_json(l.row.circumscribed)}});
      }
      print_json(out, json{{"command", "table"},
                           {"parameters", {{"max_doublings", a.max_doublings}, {"digits", a.digits}}},
                           {"results", rows}});
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// cf

struct CfArgs {
  std::string value;
  std::string from_bound;
  int doublings = 5;
  int digits = 8;
  std::string format = "text";
};

void cmd_cf(const CfArgs& a, const BoundsOptions& opts, std::ostream& out) {
  Rational q;
  std::string source;
  std::string decimal;
  std::optional<PolygonBounds> bounds;
  BoundSide side = BoundSide::Lower;
  if (!a.value.empty()) {
    q = parse_decimal(a.value);
    source = "value";
    decimal = a.value;
  } else {
    side = a.from_bound == "upper" ? BoundSide::Upper : BoundSide::Lower;
    bounds = bounds_at(a.doublings, a.digits, opts);
    q = bound_decimal(*bounds, side, a.digits);
    source = side == BoundSide::Lower ? "c_" + std::to_string(bounds->sides) + " rounded down"
                                      : "C_" + std::to_string(bounds->sides) + " rounded up";
    decimal = to_decimal(q, a.digits, Rounding::Floor);
  }
  const ContinuedFraction cf = expand(q);
  const std::vector<Convergent> convs = convergents(cf);
  const Interval* enclosure = nullptr;
  if (bounds) enclosure = side == BoundSide::Lower ? &bounds->lower : &bounds->upper;
  const auto verdict = [&](const Convergent& c) {
    return enclosure ? std::string(to_string(side_of(c.value, *enclosure))) : std::string();
  };

  switch (parse_format(a.format)) {
    case Format::Text: {
      out << "input: " << source << " " << decimal << " = " << q.str() << '\n';
      if (enclosure) {
        out << "enclosure: " << bracket(describe(*enclosure, a.digits)) << '\n';
      }
      out << "expansion: " << cf.str() << '\n';
      out << "convergents:\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : convs) rows.push_back({"  " + std::to_string(c.index), c.value.str(), verdict(c)});
      print_table(out, rows);
      break;
    }
    case Format::Csv:
      out << "index,convergent,side\n";
      for (const auto& c : convs) out << c.index << ',' << c.value.str() << ',' << verdict(c) << '\n';
      break;
    case Format::Json: {
      json params = bounds ? json{{"from_bound", a.from_bound}, {"doublings", a.doublings}, {"digits", a.digits}}
                           : json{{"value", a.value}};
      json list = json::array();
      for (const auto& c : convs) {
        json item{{"index", c.index}, {"value", c.value.str()}};
        if (enclosure) item["side"] = verdict(c);
        list.push_back(item);
      }
      json results{{"input", decimal}, {"rational", q.str()}, {"expansion", cf_json(cf)}};
      if (enclosure) results["enclosure"] = to_json(describe(*enclosure, a.digits));
      results["convergents"] = list;
      print_json(out, json{{"command", "cf"}, {"parameters", params}, {"results", results}});
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// approx

struct ApproxArgs {
  int doublings = 5;
  int digits = 8;
  std::string den_cap = "100";
  std::string format = "text";
};

void cmd_approx(const ApproxArgs& a, const BoundsOptions& opts, std::ostream& out) {
  Integer cap;
  if (cap.set_str(a.den_cap, 10) != 0 || cap < 1) {
    throw InputError("--den-cap must be a positive integer");
  }
  const RationalBounds rb = certified_rational_bounds(a.doublings, a.digits, cap, opts);
  const std::string n = std::to_string(rb.polygon.sides);
  const Enclosure lower = describe(rb.polygon.lower, a.digits);
  const Enclosure upper = describe(rb.polygon.upper, a.digits);

  const auto candidate_rows = [&](const std::vector<CandidateVerdict>& vs) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : vs) {
      std::string note = v.selected ? "selected" : (v.within_cap ? "" : "over cap");
      rows.push_back({"  " + std::to_string(v.convergent.index), v.convergent.value.str(), to_string(v.side), note});
    }
    return rows;
  };
  const auto candidate_json = [](const std::vector<CandidateVerdict>& vs) {
    json list = json::array();
    for (const auto& v : vs) {
      list.push_back(json{{"index", v.convergent.index},
                          {"value", v.convergent.value.str()},
                          {"side", to_string(v.side)},
                          {"within_cap", v.within_cap},
                          {"selected", v.selected}});
    }
    return list;
  };

  switch (parse_format(a.format)) {
    case Format::Text:
      out << rb.lower.str() << " < pi < " << rb.upper.str() << '\n';
      out << "lower: " << rb.lower.str() << " is Below the c_" << n << " enclosure " << bracket(lower) << '\n';
      out << "upper: " << rb.upper.str() << " is Above the C_" << n << " enclosure " << bracket(upper) << '\n';
      out << "c_" << n << " candidates from " << to_decimal(rb.lower_decimal, a.digits, Rounding::Floor) << " = "
          << rb.lower_expansion.str() << ":\n";
      print_table(out, candidate_rows(rb.lower_candidates));
      out << "C_" << n << " candidates from " << to_decimal(rb.upper_decimal, a.digits, Rounding::Floor) << " = "
          << rb.upper_expansion.str() << ":\n";
      print_table(out, candidate_rows(rb.upper_candidates));
      break;
    case Format::Csv:
      out << "bound,value,enclosure_lo,enclosure_hi,side\n";
      out << "lower," << rb.lower.str() << ',' << lower.lo << ',' << lower.hi << ",Below\n";
      out << "upper," << rb.upper.str() << ',' << upper.lo << ',' << upper.hi << ",Above\n";
      break;
    case Format::Json:
      print_json(out, json{{"command", "approx"},
                           {"parameters", {{"doublings", a.doublings}, {"digits", a.digits}, {"den_cap", a.den_cap}}},
                           {"results",
                            {{"n", rb.polygon.sides},
                             {"lower", rb.lower.str()},
                             {"upper", rb.upper.str()},
                             {"c_n", to_json(lower)},
                             {"C_n", to_json(upper)},
                             {"lower_expansion", cf_json(rb.lower_expansion)},
                             {"upper_expansion", cf_json(rb.upper_expansion)},
                             {"lower_candidates", candidate_json(rb.lower_candidates)},
                             {"upper_candidates", candidate_json(rb.upper_candidates)}}}});
      break;
  }
}

// ---------------------------------------------------------------------------
// series

struct SeriesArgs {
  std::vector<std::string> series{"all"};
  int terms = 10;
  int digits = 8;
  std::string format = "text";
};

void cmd_series(const SeriesArgs& a, std::ostream& out) {
  std::vector<SeriesKind> kinds;
  for (const auto& name : a.series) {
    if (name == "all") {
      kinds.insert(kinds.end(), std::begin(kAllSeries), std::end(kAllSeries));
    } else {
      kinds.push_back(parse_series_kind(name));
    }
  }
  const std::vector<SeriesEstimate> rows = convergence_report(kinds, a.terms, a.digits);

  struct Line {
    std::string series, terms, estimate, exact, lo, hi, error;
  };
  std::vector<Line> lines;
  for (const auto& r : rows) {
    Line l{std::string(series_name(r.series)), std::to_string(r.terms), r.decimal(a.digits), "", "", "",
           r.error_vs_reference};
    if (const auto* q = std::get_if<Rational>(&r.estimate)) {
      l.exact = q->str();
    } else {
      const auto& iv = std::get<Interval>(r.estimate);
      l.lo = iv.lo_decimal(a.digits);
      l.hi = iv.hi_decimal(a.digits);
    }
    lines.push_back(std::move(l));
  }

  switch (parse_format(a.format)) {
    case Format::Text: {
      std::vector<std::vector<std::string>> table{{"series", "N", "estimate", "exact / enclosure", "error vs 3.141592653589"}};
      for (const auto& l : lines) {
        table.push_back({l.series, l.terms, l.estimate, l.exact.empty() ? "[" + l.lo + ", " + l.hi + "]" : l.exact,
                         l.error});
      }
      print_table(out, table);
      break;
    }
    case Format::Csv:
      out << "series,terms,estimate,exact,lo,hi,error\n";
      for (const auto& l : lines) {
        out << l.series << ',' << l.terms << ',' << l.estimate << ',' << l.exact << ',' << l.lo << ',' << l.hi
            << ',' << l.error << '\n';
      }
      break;
    case Format::Json: {
      json list = json::array();
      for (const auto& l : lines) {
        json item{{"series", l.series}, {"terms", std::stoi(l.terms)}, {"estimate", l.estimate}};
        if (!l.exact.empty()) {
          item["exact"] = l.exact;
        } else {
          item["lo"] = l.lo;
          item["hi"] = l.hi;
        }
        item["error"] = l.error;
        list.push_back(item);
      }
      print_json(out, json{{"command", "series"},
                           {"parameters", {{"series", a.series}, {"terms", a.terms}, {"digits", a.digits}}},
                           {"results", list}});
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// export-fig3

struct ExportArgs {
  int max_doublings = 5;
  int digits = 8;
};

void cmd_export_fig3(const ExportArgs& a, const BoundsOptions& opts, std::ostream& out) {
  out << "n,c_n,c_n_hi,C_n,C_n_hi\n";
  for (int k = 0; k <= a.max_doublings; ++k) {
    const PolygonBounds b = bounds_at(k, a.digits, opts);
    out << b.sides << ',' << b.lower.lo_decimal(a.digits) << ',' << b.lower.hi_decimal(a.digits) << ','
        << b.upper.lo_decimal(a.digits) << ',' << b.upper.hi_decimal(a.digits) << '\n';
  }
  // Horizontal reference lines; both column pairs carry the same value.
  const std::pair<const char*, Rational> references[] = {
      {"22/7", Rational(22, 7)},
      {"223/71", Rational(223, 71)},
      {"245/78", Rational(245, 78)},
      {"pi_ref", pi_reference()},
  };
  for (const auto& [label, q] : references) {
    const std::string lo = to_decimal(q, a.digits, Rounding::Floor);
    const std::string hi = to_decimal(q, a.digits, Rounding::Ceil);
    out << label << ',' << lo << ',' << hi << ',' << lo << ',' << hi << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified polygon bounds and rational approximations of pi", "archpi"};
  app.require_subcommand(1);
  app.fallthrough();

  BoundsOptions opts;
  app.add_option("--max-precision", opts.max_precision, "Upper limit on working precision (digits)")
      ->check(CLI::PositiveNumber);

  const auto format_option = [](CLI::App* sub, std::string& target) {
    sub->add_option("--format", target, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Enclosures of c_n and C_n for n = 3·2^k");
  bounds->add_option("-k,--doublings", bounds_args.doublings, "Doublings k")
      ->check(CLI::Range(0, kMaxDoublings));
  bounds->add_option("-d,--digits", bounds_args.digits, "Decimal digits")->check(CLI::PositiveNumber);
  format_option(bounds, bounds_args.format);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Closed forms and values of c_n, C_n for k = 0..K");
  table->add_option("-K,--max-doublings", table_args.max_doublings, "Largest k")
      ->check(CLI::Range(0, kMaxDoublings));
  table->add_option("-d,--digits", table_args.digits, "Decimal digits")->check(CLI::PositiveNumber);
  format_option(table, table_args.format);

  CfArgs cf_args;
  auto* cf = app.add_subcommand("cf", "Continued fraction expansion and convergents");
  auto* value_opt = cf->add_option("--value", cf_args.value, "Decimal literal to expand");
  auto* bound_opt = cf->add_option("--from-bound", cf_args.from_bound, "Expand c_n (lower) or C_n (upper)")
                        ->check(CLI::IsMember({"lower", "upper"}));
  value_opt->excludes(bound_opt);
  cf->add_option("-k,--doublings", cf_args.doublings, "Doublings k")->check(CLI::Range(0, kMaxDoublings));
  cf->add_option("-d,--digits", cf_args.digits, "Decimal digits")->check(CLI::PositiveNumber);
  format_option(cf, cf_args.format);

  ApproxArgs approx_args;
  auto* approx = app.add_subcommand("approx", "Certified rational bounds on pi from convergents");
  approx->add_option("-k,--doublings", approx_args.doublings, "Doublings k")->check(CLI::Range(0, kMaxDoublings));
  approx->add_option("-d,--digits", approx_args.digits, "Decimal digits")->check(CLI::PositiveNumber);
  approx->add_option("-m,--den-cap", approx_args.den_cap, "Largest admissible denominator");
  format_option(approx, approx_args.format);

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Partial evaluations of classical pi series");
  series->add_option("-s,--series", series_args.series, "leibniz, nilakantha, brouncker, wallis, viete or all")
      ->delimiter(',');
  series->add_option("-N,--terms", series_args.terms, "Largest term count")->check(CLI::PositiveNumber);
  series->add_option("-d,--digits", series_args.digits, "Decimal digits")->check(CLI::PositiveNumber);
  format_option(series, series_args.format);

  ExportArgs export_args;
  auto* fig3 = app.add_subcommand("export-fig3", "CSV of c_n, C_n against n with reference constants");
  fig3->add_option("-K,--max-doublings", export_args.max_doublings, "Largest k")
      ->check(CLI::Range(0, kMaxDoublings));
  fig3->add_option("-d,--digits", export_args.digits, "Decimal digits")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (cf->parsed() && cf_args.value.empty() && cf_args.from_bound.empty()) {
      throw CLI::RequiredError("cf needs --value or --from-bound");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kBadArguments;
  }

  try {
    if (bounds->parsed()) cmd_bounds(bounds_args, opts, out);
    if (table->parsed()) cmd_table(table_args, opts, out);
    if (cf->parsed()) cmd_cf(cf_args, opts, out);
    if (approx->parsed()) cmd_approx(approx_args, opts, out);
    if (series->parsed()) cmd_series(series_args, out);
    if (fig3->parsed()) cmd_export_fig3(export_args, opts, out);
  } catch (const NoValidBound& e) {
    err << "archpi: " << e.what() << '\n';
    return kNoValidBound;
  } catch (const PrecisionError& e) {
    err << "archpi: " << e.what() << '\n';
    return kPrecisionFailure;
  } catch (const InputError& e) {
    err << "archpi: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::invalid_argument& e) {
    err << "archpi: " << e.what() << '\n';
    return kBadArguments;
  }
  return kSuccess;
}

}  // namespace archpi::cli
