#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trigproof/multipoly.hpp"

using trigproof::MultiPoly;
using trigproof::Rational;

namespace {

MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }
MultiPoly konst(long long c) { return MultiPoly::constant(Rational(c)); }

// Small random polynomial in x, y, z with coefficients in [-9, 9].
MultiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> expo(0, 3);
  MultiPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    MultiPoly t = konst(coef(rng));
    t *= var("x").pow(expo(rng));
    t *= var("y").pow(expo(rng));
    t *= var("z").pow(expo(rng));
    p += t;
  }
  return p;
}

}  // namespace

TEST_CASE("canonical sparse form") {
  MultiPoly p = var("x") + var("y") - var("x");
  CHECK(p == var("y"));
  CHECK(p.term_count() == 1);
  MultiPoly z = var("x") - var("x");
  CHECK(z.is_zero());
  CHECK(trigproof::poly_is_zero(z));
  CHECK(z.str() == "0");
}

TEST_CASE("ring identities") {
  MultiPoly x = var("x");
  MultiPoly y = var("y");
  CHECK(((x + y).pow(2) - (x * x + konst(2) * x * y + y * y)).is_zero());
  CHECK((x * x - y * y - (x - y) * (x + y)).is_zero());
}

TEST_CASE("property: associativity, distributivity, additive inverse") {
  std::mt19937 rng(42);
  for (int i = 0; i < 200; ++i) {
    MultiPoly p = random_poly(rng);
    MultiPoly q = random_poly(rng);
    MultiPoly r = random_poly(rng);
    CHECK(((p + q) + r) == (p + (q + r)));
    CHECK((p * (q + r)) == (p * q + p * r));
    CHECK((p * q) == (q * p));
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("deterministic rendering") {
  MultiPoly p = var("a").pow(2) - var("b").pow(2) - var("c").pow(2);
  CHECK(p.str() == "a^2 - b^2 - c^2");
  MultiPoly q = konst(2) * var("a") * var("b") + konst(-3);
  CHECK(q.str() == "-3 + 2*a*b");
  MultiPoly h = MultiPoly::constant(trigproof::rat_make(1, 2)) * var("x");
  CHECK(h.str() == "1/2*x");
}

TEST_CASE("content and normalization") {
  MultiPoly p = konst(-4) * var("x") + konst(-6);
  // signed content: leading (lex) coefficient is -4 on x.
  CHECK(p.signed_content() == trigproof::rat_make(-2, 1));
  CHECK(p.normalized().str() == "3 + 2*x");
  CHECK(p.normalized() == (konst(2) * var("x") + konst(3)));
  CHECK(MultiPoly().normalized().is_zero());

  MultiPoly fr = MultiPoly::constant(trigproof::rat_make(1, 2)) * var("x") +
                 MultiPoly::constant(trigproof::rat_make(1, 3));
  CHECK(fr.normalized() == (konst(3) * var("x") + konst(2)));
}

TEST_CASE("exact division") {
  MultiPoly x = var("x");
  MultiPoly y = var("y");
  MultiPoly d = x + y;
  MultiPoly p = (x + y) * (x - y);
  auto q = p.divided_exactly_by(d);
  REQUIRE(q.has_value());
  CHECK(*q == (x - y));
  CHECK_FALSE((p + konst(1)).divided_exactly_by(d).has_value());
  CHECK_FALSE(x.divided_exactly_by(y).has_value());

  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    MultiPoly a = random_poly(rng);
    MultiPoly b = random_poly(rng);
    if (b.is_zero()) continue;
    auto quot = (a * b).divided_exactly_by(b);
    REQUIRE(quot.has_value());
    CHECK(*quot == a);
  }
}

TEST_CASE("evaluation") {
  MultiPoly p = var("x").pow(2) + konst(3) * var("y");
  std::map<std::string, Rational> at{{"x", trigproof::rat_make(1, 2)},
                                     {"y", Rational(2)}};
  CHECK(p.eval(at) == trigproof::rat_make(25, 4));
  CHECK(p.eval_double({{"x", 0.5}, {"y", 2.0}}) == doctest::Approx(6.25));
  CHECK_THROWS_AS(p.eval({{"x", Rational(1)}}), trigproof::UndeclaredAtom);
}
