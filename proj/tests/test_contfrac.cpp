#include <algorithm>
#include <vector>

#include "doctest.h"

#include "archpi/contfrac.hpp"
#include "archpi/errors.hpp"
#include "oracles.hpp"

using namespace archpi;
using archpi::testing::Generator;

namespace {

ContinuedFraction cf_of(std::initializer_list<long> coeffs) {
  ContinuedFraction cf;
  for (long a : coeffs) cf.coeffs.emplace_back(a);
  return cf;
}

std::vector<std::string> strs(const std::vector<Convergent>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.value.str());
  return out;
}

}  // namespace

TEST_SUITE("parse_decimal") {
  TEST_CASE("exact values") {
    CHECK(parse_decimal("3.14") == Rational(157, 50));
    CHECK(parse_decimal("3") == Rational(3));
    CHECK(parse_decimal("3.14103195") == Rational(Integer(314103195), Integer(100000000)));
    CHECK(parse_decimal(".5") == Rational(1, 2));
    CHECK(parse_decimal("2.") == Rational(2));
    CHECK(parse_decimal("007.250") == Rational(29, 4));
  }

  TEST_CASE("errors") {
    for (const char* bad : {"", ".", "3.1.4", "3e5", "pi", "3,14", " 3", "+"}) {
      CHECK_THROWS_AS(parse_decimal(bad), MalformedDecimal);
    }
    for (const char* bad : {"0", "0.000", "-3.14", "-0"}) {
      CHECK_THROWS_AS(parse_decimal(bad), NonPositiveValue);
    }
  }
}

TEST_SUITE("continued fractions") {
  TEST_CASE("expansions") {
    CHECK(expand(Rational(157, 50)) == cf_of({3, 7, 7}));
    CHECK(expand(Rational(Integer(314103195), Integer(100000000))) == cf_of({3, 7, 11, 25, 1, 25, 1, 27, 13}));
    CHECK(expand(Rational(3)) == cf_of({3}));
    CHECK(expand(Rational(1, 3)) == cf_of({0, 3}));
    CHECK(expand(Rational(157, 50)).str() == "[3;7,7]");
    CHECK_THROWS_AS(expand(Rational(0)), NonPositiveValue);
    CHECK_THROWS_AS(expand(Rational(-1, 2)), NonPositiveValue);
  }

  TEST_CASE("convergents") {
    CHECK(strs(convergents(cf_of({3, 7, 7}))) == std::vector<std::string>{"3/1", "22/7", "157/50"});

    const auto c96 = strs(convergents(expand(parse_decimal("3.14103195"))));
    CHECK(std::vector<std::string>(c96.begin(), c96.begin() + 4) ==
          std::vector<std::string>{"3/1", "22/7", "245/78", "6147/1957"});

    const auto c24576 = strs(convergents(expand(parse_decimal("3.14159267"))));
    CHECK(std::vector<std::string>(c24576.begin(), c24576.begin() + 4) ==
          std::vector<std::string>{"3/1", "22/7", "333/106", "355/113"});

    const auto C96 = strs(convergents(expand(parse_decimal("3.14271460"))));
    CHECK(std::vector<std::string>(C96.begin(), C96.begin() + 3) ==
          std::vector<std::string>{"3/1", "22/7", "3149/1002"});

    const auto cs = convergents(cf_of({3, 7, 7}));
    for (std::size_t i = 0; i < cs.size(); ++i) CHECK(cs[i].index == i);
    CHECK(convergents(ContinuedFraction{}).empty());
  }

  TEST_CASE("reconstruct") {
    CHECK(reconstruct(cf_of({3, 7, 7})) == Rational(157, 50));
    CHECK(reconstruct(cf_of({3})) == Rational(3));
    CHECK(reconstruct(cf_of({3, 7, 15, 1})) == Rational(355, 113));
  }
}

TEST_SUITE("continued fraction properties") {
  TEST_CASE("expansion roundtrips exactly") {
    Generator gen(11);
    for (int i = 0; i < 1000; ++i) {
      const Rational q = gen.positive_rational(3);
      const ContinuedFraction cf = expand(q);
      CHECK(reconstruct(cf) == q);
      CHECK(sgn(cf.coeffs.front()) >= 0);
      for (std::size_t j = 1; j < cf.coeffs.size(); ++j) CHECK(cf.coeffs[j] >= 1);
      CHECK(convergents(cf).back().value == q);
    }
  }

  TEST_CASE("convergents alternate and improve") {
    Generator gen(12);
    for (int i = 0; i < 300; ++i) {
      const Rational q = gen.positive_rational(2);
      const auto cs = convergents(expand(q));
      for (std::size_t j = 0; j < cs.size(); ++j) {
        const bool last = j + 1 == cs.size();
        const Rational& c = cs[j].value;
        if (last) {
          CHECK(c == q);
        } else if (j % 2 == 0) {
          CHECK(c < q);
        } else {
          CHECK(c > q);
        }
        if (j > 0) {
          CHECK(abs(q - c) < abs(q - cs[j - 1].value));
          if (j > 1) CHECK(c.den() > cs[j - 1].value.den());
        }
      }
    }
  }
}

TEST_SUITE("certified rational bounds") {
  TEST_CASE("improved bound at n = 96") {
    const RationalBounds rb = certified_rational_bounds(5, 8, Integer(100));
    CHECK(rb.lower == Rational(245, 78));
    CHECK(rb.upper == Rational(22, 7));
    CHECK(rb.lower_decimal == parse_decimal("3.14103195"));
    CHECK(rb.upper_decimal == parse_decimal("3.14271460"));
    CHECK(rb.lower_expansion == cf_of({3, 7, 11, 25, 1, 25, 1, 27, 13}));
    CHECK(rb.lower_candidates.size() == 9);
    CHECK(std::count_if(rb.lower_candidates.begin(), rb.lower_candidates.end(),
                        [](const CandidateVerdict& v) { return v.selected; }) == 1);
  }

  TEST_CASE("a tighter cap falls back to 3/1") {
    // Convergents of [3;7,11,25,...]: 3/1 (Below), 22/7 (Above), 245/78 > cap.
    const RationalBounds rb = certified_rational_bounds(5, 8, Integer(75));
    CHECK(rb.lower == Rational(3));
    CHECK(rb.upper == Rational(22, 7));
    const RationalBounds rb7 = certified_rational_bounds(5, 8, Integer(7));
    CHECK(rb7.lower == Rational(3));
    CHECK(rb7.upper == Rational(22, 7));
  }

  TEST_CASE("n = 24576 recovers 355/113") {
    const RationalBounds rb = certified_rational_bounds(13, 8, Integer(200));
    CHECK(rb.upper == Rational(355, 113));
    // c_24576 cut down is 3.14159264 = [3;7,15,1,278,...]; 333/106 is the
    // largest convergent under the cap lying below it.
    CHECK(rb.lower_decimal == parse_decimal("3.14159264"));
    CHECK(rb.lower == Rational(333, 106));
  }

  TEST_CASE("no admissible convergent") {
    CHECK_THROWS_AS(certified_rational_bounds(5, 8, Integer(1)), NoValidBound);
    CHECK_THROWS_AS(certified_rational_bounds(5, 8, Integer(0)), std::invalid_argument);
  }

  TEST_CASE("returned bounds always bracket pi") {
    for (int k = 2; k <= 14; k += 3) {
      for (long cap : {10L, 100L, 1000L, 100000L}) {
        try {
          const RationalBounds rb = certified_rational_bounds(k, 12, Integer(cap));
          CHECK(rb.lower < pi_reference());
          CHECK(pi_reference() < rb.upper);
        } catch (const NoValidBound&) {
        }
      }
    }
  }

  TEST_CASE("Archimedes' chain of inequalities") {
    const PolygonBounds b = bounds_at(5, 8);
    CHECK(side_of(Rational(223, 71), b.lower) == Side::Below);
    CHECK(Rational(223, 71) < Rational(245, 78));
    CHECK(side_of(Rational(245, 78), b.lower) == Side::Below);
    CHECK(b.lower.hi() < b.upper.lo());
    CHECK(side_of(Rational(22, 7), b.upper) == Side::Above);
  }
}
