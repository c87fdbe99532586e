#include <catch2/catch_amalgamated.hpp>

#include "leibdef/rational.hpp"

using leibdef::Rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");  // sign moves to the numerator
  CHECK(Rational(-4, -2).str() == "2");
  CHECK(Rational().str() == "0");
  CHECK(Rational(0, 5) == Rational());
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse("-17") == Rational(-17));
  CHECK(Rational::parse("0") == Rational());
  CHECK(Rational::parse("123456789012345678901234567890").num_str() ==
        "123456789012345678901234567890");
  CHECK(Rational::parse("123456789012345678901234567890/4").den_str() == "2");

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2x"), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK(Rational(5, 7).inverse() == Rational(7, 5));

  CHECK_THROWS_AS(Rational(1) / Rational(), std::domain_error);
  CHECK_THROWS_AS(Rational().inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(5).sign() == 1);
  CHECK(Rational(-5, 3).sign() == -1);
  CHECK(Rational().sign() == 0);
  CHECK(Rational().is_zero());
}
