#include "doctest.h"

#include "archpi/errors.hpp"
#include "archpi/polygon.hpp"
#include "archpi/radical.hpp"
#include "oracles.hpp"

using namespace archpi;

namespace {

bool near(const Interval& iv, const std::string& value) {
  const Rational x = testing::decimal(value);
  const Rational tol(Integer(1), pow10(8));
  return iv.lo() <= x + tol && x - tol <= iv.hi();
}

}  // namespace

TEST_CASE("closed forms from Table 1") {
  CHECK(render(nested_radical_form(3, Perimeter::Inscribed)) == "3√3/2");
  CHECK(render(nested_radical_form(3, Perimeter::Circumscribed)) == "3√3");
  CHECK(render(nested_radical_form(6, Perimeter::Inscribed)) == "3");
  CHECK(render(nested_radical_form(6, Perimeter::Circumscribed)) == "2√3");
  CHECK(render(nested_radical_form(12, Perimeter::Inscribed)) == "12·√(2−√3)/2");
  CHECK(render(nested_radical_form(12, Perimeter::Circumscribed)) == "12·√(2−√3)/√(2+√3)");
  CHECK(render(nested_radical_form(24, Perimeter::Circumscribed)) == "24·√(2−√(2+√3))/√(2+√(2+√3))");
  CHECK(render(nested_radical_form(48, Perimeter::Inscribed)) == "48·√(2−√(2+√(2+√3)))/2");
  CHECK(render(nested_radical_form(96, Perimeter::Circumscribed)) ==
        "96·√(2−√(2+√(2+√(2+√3))))/√(2+√(2+√(2+√(2+√3))))");
}

TEST_CASE("tower structure") {
  for (int k = 2; k <= 12; ++k) {
    const std::uint64_t n = sides_for(k);
    const RadicalExpr c = nested_radical_form(n, Perimeter::Inscribed);
    const RadicalExpr C = nested_radical_form(n, Perimeter::Circumscribed);
    const NestedRadical inner = NestedRadical::tower(k - 2);
    CHECK(c.multiplier == Integer(std::to_string(n)));
    CHECK(c.numerator == inner.wrapped(RadicalSign::Minus));
    CHECK(std::get<Integer>(c.denominator) == 2);
    CHECK(C.numerator == c.numerator);
    CHECK(std::get<NestedRadical>(C.denominator) == inner.wrapped(RadicalSign::Plus));
  }
}

TEST_CASE("unsupported side counts") {
  for (std::uint64_t n : {0, 1, 2, 4, 5, 9, 18, 36, 100}) {
    CHECK_THROWS_AS(nested_radical_form(n, Perimeter::Inscribed), UnsupportedSideCount);
  }
}

TEST_CASE("render and parse are inverse") {
  for (int k = 0; k <= 10; ++k) {
    for (Perimeter which : {Perimeter::Inscribed, Perimeter::Circumscribed}) {
      const RadicalExpr e = nested_radical_form(sides_for(k), which);
      const std::string text = render(e);
      CHECK(parse_radical(text) == e);
      CHECK(render(parse_radical(text)) == text);
    }
  }
  for (const char* text : {"√3", "7", "√(2−√3)/5", "2·√(2+√3)", "√3/√(2−√(2+√3))"}) {
    CHECK(render(parse_radical(text)) == text);
  }
}

TEST_CASE("parse accepts ascii minus and an omitted dot") {
  CHECK(parse_radical("12√(2-√3)/2") == nested_radical_form(12, Perimeter::Inscribed));
}

TEST_CASE("malformed radicals") {
  for (const char* text : {"", "/2", "√", "√(3+√3)", "√(2*√3)", "√(2+√3", "12·", "3√3/", "3√3x"}) {
    CHECK_THROWS_AS(parse_radical(text), MalformedRadical);
  }
}

TEST_CASE("evaluating closed forms") {
  CHECK(near(eval_radical(nested_radical_form(12, Perimeter::Inscribed), 20), "3.10582854"));
  CHECK(near(eval_radical(nested_radical_form(48, Perimeter::Circumscribed), 20), "3.14608622"));
  CHECK(eval_radical(nested_radical_form(6, Perimeter::Inscribed), 5).contains(Rational(3)));
}

TEST_CASE("closed forms overlap the recurrence for every Table 1 row") {
  for (int k = 0; k <= 5; ++k) {
    const PolygonBounds b = bounds_at(k, 15);
    CHECK(eval_radical(nested_radical_form(b.sides, Perimeter::Inscribed), 25).overlaps(b.lower));
    CHECK(eval_radical(nested_radical_form(b.sides, Perimeter::Circumscribed), 25).overlaps(b.upper));
  }
}
