#include "doctest.h"
#include "nilgood/rational.hpp"

using nilgood::Rational;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(3, -6).num() == -1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) - Rational(1) == Rational(-1, 3));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK((-Rational(1, 2)).num() == -1);
  CHECK(Rational(7).is_integer());
  CHECK(!Rational(7, 2).is_integer());
  CHECK(Rational(0, 5).is_zero());
}

TEST_CASE("rational printing") {
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0).str() == "0");
}

TEST_CASE("rational guards") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
}
