#include "archpi/radical.hpp"

#include <cctype>

#include "archpi/errors.hpp"

namespace archpi {
namespace {

constexpr std::string_view kRoot = "√";   // √
constexpr std::string_view kMinus = "−";  // −
constexpr std::string_view kDot = "·";    // ·

int doublings_of(std::uint64_t sides) {
  if (sides < 3 || sides % 3 != 0) {
    throw UnsupportedSideCount("side count " + std::to_string(sides) + " is not 3·2^k");
  }
  const std::uint64_t power = sides / 3;
  if ((power & (power - 1)) != 0) {
    throw UnsupportedSideCount("side count " + std::to_string(sides) + " is not 3·2^k");
  }
  int k = 0;
  while ((std::uint64_t{1} << k) != power) ++k;
  return k;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RadicalExpr expression() {
    RadicalExpr expr;
    bool have_multiplier = false;
    if (at_digit()) {
      expr.multiplier = integer();
      have_multiplier = true;
    }
    const bool dotted = have_multiplier && accept(kDot);
    if (dotted || peek(kRoot)) expr.numerator = radical();
    if (!have_multiplier && !expr.numerator) fail("expected a number or a radical");
    if (accept("/")) {
      if (at_digit()) {
        expr.denominator = integer();
      } else {
        expr.denominator = radical();
      }
    }
    if (pos_ != text_.size()) fail("trailing characters");
    return expr;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedRadical(what + " at offset " + std::to_string(pos_) + " in \"" +
                           std::string(text_) + "\"");
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool peek(std::string_view token) const { return text_.substr(pos_).starts_with(token); }

  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected \"" + std::string(token) + "\"");
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  NestedRadical radical() {
    NestedRadical result;
    while (true) {
      expect(kRoot);
      if (accept("3")) break;
      expect("(");
      expect("2");
      if (accept("+")) {
        result.signs.push_back(RadicalSign::Plus);
      } else if (accept(kMinus) || accept("-")) {
        result.signs.push_back(RadicalSign::Minus);
      } else {
        fail("expected '+' or '−'");
      }
    }
    for (std::size_t i = 0; i < result.signs.size(); ++i) expect(")");
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NestedRadical NestedRadical::tower(int depth) {
  if (depth < 0) throw std::invalid_argument("NestedRadical::tower: negative depth");
  return NestedRadical{std::vector<RadicalSign>(static_cast<std::size_t>(depth), RadicalSign::Plus)};
}

NestedRadical NestedRadical::wrapped(RadicalSign sign) const {
  NestedRadical result;
  result.signs.reserve(signs.size() + 1);
  result.signs.push_back(sign);
  result.signs.insert(result.signs.end(), signs.begin(), signs.end());
  return result;
}

RadicalExpr nested_radical_form(std::uint64_t sides, Perimeter which) {
  const int k = doublings_of(sides);
  const bool inscribed = which == Perimeter::Inscribed;
  const NestedRadical root3 = NestedRadical::tower(0);
  if (k == 0) {
    if (inscribed) return RadicalExpr{3, root3, Integer(2)};
    return RadicalExpr{3, root3, std::monostate{}};
  }
  if (k == 1) {
    if (inscribed) return RadicalExpr{3, std::nullopt, std::monostate{}};
    return RadicalExpr{2, root3, std::monostate{}};
  }
  const NestedRadical inner = NestedRadical::tower(k - 2);
  RadicalExpr expr{Integer(std::to_string(sides)), inner.wrapped(RadicalSign::Minus), {}};
  if (inscribed) {
    expr.denominator = Integer(2);
  } else {
    expr.denominator = inner.wrapped(RadicalSign::Plus);
  }
  return expr;
}

std::string render(const NestedRadical& radical) {
  std::string out;
  for (const RadicalSign sign : radical.signs) {
    out += kRoot;
    out += "(2";
    out += sign == RadicalSign::Plus ? std::string_view("+") : kMinus;
  }
  out += kRoot;
  out += "3";
  out.append(radical.signs.size(), ')');
  return out;
}

std::string render(const RadicalExpr& expr) {
  std::string out;
  const bool unit = expr.multiplier == 1;
  if (!unit || !expr.numerator) out += expr.multiplier.get_str();
  if (expr.numerator) {
    // A bare √3 is juxtaposed (3√3); towers get an explicit dot.
    if (!unit && !expr.numerator->signs.empty()) out += kDot;
    out += render(*expr.numerator);
  }
  if (const auto* d = std::get_if<Integer>(&expr.denominator)) {
    out += "/" + d->get_str();
  } else if (const auto* r = std::get_if<NestedRadical>(&expr.denominator)) {
    out += "/" + render(*r);
  }
  return out;
}

RadicalExpr parse_radical(std::string_view text) { return Parser(text).expression(); }

Interval eval_radical(const NestedRadical& radical, int precision) {
  const Interval two = Interval::exact(2, precision);
  Interval value = interval_sqrt(Interval::exact(3, precision));
  for (auto it = radical.signs.rbegin(); it != radical.signs.rend(); ++it) {
    Interval radicand = *it == RadicalSign::Plus ? two + value : two - value;
    value = interval_sqrt(radicand);
  }
  return value;
}

Interval eval_radical(const RadicalExpr& expr, int precision) {
  Interval value = Interval::exact(expr.multiplier, precision);
  if (expr.numerator) value = value * eval_radical(*expr.numerator, precision);
  if (const auto* d = std::get_if<Integer>(&expr.denominator)) {
    value = value / Interval::exact(*d, precision);
  } else if (const auto* r = std::get_if<NestedRadical>(&expr.denominator)) {
    value = value / eval_radical(*r, precision);
  }
  return value;
}

}  // namespace archpi
