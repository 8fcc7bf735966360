#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trigproof/rational.hpp"

using trigproof::BigInt;
using trigproof::Rational;
using trigproof::rat_make;

TEST_CASE("canonical construction") {
  CHECK(rat_make(2, 4) == rat_make(1, 2));
  CHECK(rat_make(2, 4).numerator() == 1);
  CHECK(rat_make(2, 4).denominator() == 2);

  CHECK(rat_make(0, 5).numerator() == 0);
  CHECK(rat_make(0, 5).denominator() == 1);

  CHECK(rat_make(-3, -6) == rat_make(1, 2));
  CHECK(rat_make(3, -6).numerator() == -1);
  CHECK(rat_make(3, -6).denominator() == 2);

  CHECK_THROWS_AS(rat_make(1, 0), trigproof::DivisionByZero);
}

TEST_CASE("arithmetic") {
  Rational a = rat_make(1, 2);
  Rational b = rat_make(1, 3);
  CHECK(a + b == rat_make(5, 6));
  CHECK(a - b == rat_make(1, 6));
  CHECK(a * b == rat_make(1, 6));
  CHECK(a / b == rat_make(3, 2));
  CHECK_THROWS_AS(a / Rational(0), trigproof::DivisionByZero);
  CHECK(-a == rat_make(-1, 2));
  CHECK(a.inverse() == Rational(2));
  CHECK(rat_make(-2, 3).inverse() == rat_make(-3, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), trigproof::DivisionByZero);
  CHECK(rat_make(-2, 3).pow(3) == rat_make(-8, 27));
  CHECK(rat_make(7, 5).pow(0) == Rational(1));
}

TEST_CASE("ordering and printing") {
  CHECK(rat_make(1, 3) < rat_make(1, 2));
  CHECK(rat_make(-1, 2) < rat_make(-1, 3));
  CHECK(rat_make(3, 4).str() == "3/4");
  CHECK(Rational(7).str() == "7");
  CHECK(rat_make(-3, 4).str() == "-3/4");
}

TEST_CASE("arbitrary precision survives large products") {
  Rational big(BigInt("123456789123456789123456789"), BigInt(1));
  Rational r = big * big * big;
  CHECK(r.denominator() == 1);
  CHECK(r.numerator() % BigInt("123456789123456789123456789") == 0);
  Rational tiny = Rational(1) / big;
  CHECK((tiny * big).is_one());
}
