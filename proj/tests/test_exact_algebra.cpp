#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projcalc/linear_algebra.hpp"
#include "projcalc/poly.hpp"
#include "projcalc/rational_function.hpp"
#include "test_support.hpp"

using namespace projcalc;

namespace {

Poly P(const std::string& s, int m = 3) { return parse_poly(s, chart_ring(m)); }

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse(" -10/4 ") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(factorial(6) == Rational(720));
  CHECK(binomial(7, 3) == Rational(35));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  // Beyond 64 bits.
  CHECK(factorial(25).to_string() == "15511210043330985984000000");
}

TEST_CASE("poly add and mul") {
  CHECK(P("x1 + 1") + P("-x1") == P("1"));
  CHECK(P("x1*x2 - 2") + Poly(chart_ring(3)) == P("x1*x2 - 2"));
  CHECK(P("x1*x2") + P("x2*x1") == P("2*x1*x2"));
  CHECK(P("x1 + 1") * P("x1 - 1") == P("x1^2 - 1"));
  CHECK(P("x3 - 1/2") * P("1") == P("x3 - 1/2"));
  CHECK((P("x3 - 1/2") * P("0")).is_zero());
  CHECK_THROWS_AS(P("x1") + P("x1", 2), std::invalid_argument);
}

TEST_CASE("poly partial") {
  CHECK(P("x1^2*x2").partial("x1") == P("2*x1*x2"));
  CHECK(P("x1^3").partial("x2").is_zero());
  CHECK(P("7/3").partial("x1").is_zero());
  CHECK(P("delta*x1^2").partial("delta") == P("x1^2"));
  CHECK_THROWS(P("x1").partial("y"));
}

TEST_CASE("parse and print") {
  CHECK(P("3/2*x1^2 - x2").to_string() == "3/2*x1^2 - x2");
  CHECK(P("x1*(x1+1)") == P("x1^2 + x1"));
  CHECK(P("-(x2 - x1)^2").to_string() == "-x1^2 + 2*x1*x2 - x2^2");
  CHECK(P("2*delta*x1 - delta").to_string() == "2*x1*delta - delta");
  CHECK(P("0").to_string() == "0");
  try {
    parse_poly("x3", make_ring({"x1", "x2"}));
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::UnknownIdentifier);
    CHECK(e.position() == 0);
  }
  try {
    parse_poly("x1 + * 2", chart_ring(2));
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Syntax);
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_poly("(x1", chart_ring(2)), ParseError);
  CHECK_THROWS_AS(parse_poly("x1^-1", chart_ring(2)), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", chart_ring(2)), ParseError);
}

TEST_CASE("ring axioms, parse of print, commuting partials on random polys") {
  std::mt19937 rng(20240611);
  const RingPtr ring = chart_ring(3);
  for (int t = 0; t < 60; ++t) {
    const Poly a = testing::random_poly(rng, ring, 3, 3, 0.4);
    const Poly b = testing::random_poly(rng, ring, 3, 2, 0.4);
    const Poly c = testing::random_poly(rng, ring, 3, 2, 0.4);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(parse_poly(a.to_string(), ring) == a);
    CHECK(a.partial(0).partial(1) == a.partial(1).partial(0));
    CHECK((a * b).partial(2) == a.partial(2) * b + a * b.partial(2));
    Poly acc = a;
    acc.add_product(b, c, Rational(-3));
    CHECK(acc == a - b * c * Rational(3));
  }
}

TEST_CASE("substitute and embed") {
  const RingPtr ring = chart_ring(2);
  const std::vector<Poly> images{P("x1 + x2", 2), P("2*x2", 2), P("delta", 2)};
  CHECK(P("x1*x2 + delta", 2).substitute(images) == P("2*x1*x2 + 2*x2^2 + delta", 2));
  CHECK(P("x1 - x2", 2).embed(chart_ring(3)) == P("x1 - x2", 3));
  CHECK_THROWS(P("x3", 3).embed(ring));
}

TEST_CASE("rational functions of delta") {
  const RationalFunction d = RationalFunction::delta();
  const RationalFunction one(1);
  const RationalFunction f = (d * d - one) / (d - one);
  CHECK(f == d + one);
  CHECK(f.is_polynomial());
  const RationalFunction g = one / (d - RationalFunction(Rational(3)));
  CHECK(g.to_string() == "1/(delta - 3)");
  CHECK(!g.evaluate(Rational(3)));
  CHECK(*g.evaluate(Rational(1)) == Rational(-1, 2));
  CHECK((g - g).is_zero());
  CHECK(g * (d - RationalFunction(Rational(3))) == one);
  CHECK_THROWS_AS(one / RationalFunction(), std::domain_error);
}

TEST_CASE("matrix inverse and determinant") {
  const RationalMatrix a{{Rational(2), Rational(1)}, {Rational(5), Rational(3)}};
  CHECK(determinant(a) == Rational(1));
  CHECK(multiply(a, invert(a)) == identity_matrix(2));
  const RationalMatrix s{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(determinant(s).is_zero());
  CHECK_THROWS_AS(invert(s), std::domain_error);
}
