#include "doctest.h"

#include "fairdiv/polynomial.hpp"
#include "fairdiv/rational.hpp"

using namespace fairdiv;

TEST_CASE("rationals stay in lowest terms") {
  CHECK((Rational(2, 4)).str() == "1/2");
  CHECK((Rational(3, -6)).str() == "-1/2");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK((Rational(6, 3)).str() == "2");
}

TEST_CASE("rational parsing rejects floats and junk") {
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(Rational(9, 16)) == Rational(3, 4));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  CHECK_FALSE(exact_sqrt(Rational(-1)).has_value());
}

TEST_CASE("polynomial calculus") {
  const Polynomial p{Rational(1), Rational(2), Rational(3)};  // 1 + 2x + 3x^2
  CHECK(p(Rational(2)) == Rational(17));
  CHECK(p.integrate(Rational(0), Rational(1)) == Rational(3));
  CHECK(p.derivative() == Polynomial{Rational(2), Rational(6)});
  // p(2x + 1) at x = 0 equals p(1)
  CHECK(p.compose_affine(Rational(2), Rational(1))(Rational(0)) == p(Rational(1)));
  CHECK(Polynomial{Rational(0), Rational(0)}.is_zero());
  // (x - 1/2)^2 has minimum 0 at the vertex
  const Polynomial sq = Polynomial{Rational(-1, 2), Rational(1)} * Polynomial{Rational(-1, 2), Rational(1)};
  CHECK(sq.min_on(Rational(0), Rational(1)) == Rational(0));
}

TEST_CASE("monotone inversion: exact for rational roots, bracketed otherwise") {
  // (x^2) reaches 1/4 at exactly 1/2
  const Polynomial sq{Rational(0), Rational(0), Rational(1)};
  auto r = first_reach_monotone(sq, Rational(0), Rational(1), Rational(1, 4), default_root_epsilon());
  REQUIRE(r.is_exact());
  CHECK(*r.exact == Rational(1, 2));
  // x^2 = 1/2 is irrational: bracket of width <= eps containing 1/sqrt(2)
  const Rational eps = pow2_neg(30);
  auto b = first_reach_monotone(sq, Rational(0), Rational(1), Rational(1, 2), eps);
  REQUIRE_FALSE(b.is_exact());
  CHECK(b.upper() - b.lower() <= eps);
  CHECK(sq(b.lower()) < Rational(1, 2));
  CHECK(sq(b.upper()) >= Rational(1, 2));
  // a cubic takes the bisection route and still brackets the root
  const Polynomial cube{Rational(0), Rational(0), Rational(0), Rational(1)};
  auto c = first_reach_monotone(cube, Rational(0), Rational(1), Rational(1, 3), eps);
  CHECK(cube(c.lower()) <= Rational(1, 3));
  CHECK(cube(c.upper()) >= Rational(1, 3));
}
