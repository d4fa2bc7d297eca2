#include <doctest.h>

#include "priming/rational.h"

namespace priming {
namespace {

TEST_CASE("parse fractions, integers and decimals") {
  CHECK(ParseRational("3/4") == Rational(3, 4));
  CHECK(ParseRational("-2") == -2);
  CHECK(ParseRational("+7") == 7);
  CHECK(ParseRational("0.19") == Rational(19, 100));
  CHECK(ParseRational(".5") == Rational(1, 2));
  CHECK(ParseRational("2.") == 2);
  CHECK(ParseRational("123456789012345678901234567890") ==
        Rational(mpz_class("123456789012345678901234567890")));
}

TEST_CASE("parsed values are canonical") {
  const Rational r = ParseRational("6/4");
  CHECK(r.get_num() == 3);
  CHECK(r.get_den() == 2);
  CHECK(ToString(ParseRational("10/5")) == "2");
  CHECK(ToString(ParseRational("-0/3")) == "0");
  CHECK(ParseRational("6/2") == 3);
}

TEST_CASE("ToString canonicalizes raw GMP values") {
  Rational raw(6, 2);  // gmpxx leaves this unreduced
  CHECK(ToString(raw) == "3");
  CHECK(ToString(Rational(-3, 9) * 1) == "-1/3");
}

TEST_CASE("reject malformed literals") {
  for (const char* bad : {"", "-", "1/0", "1e3", "1.5e2", "abc", "1/2/3", "1/-2",
                          " 1", "1 ", "0x10", ".", "--1", "1.2.3", "/2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ParseRational(bad), InputError);
  }
}

TEST_CASE("dot and sum") {
  const RationalVector a = {Rational(1, 2), 2, 0};
  const RationalVector b = {4, Rational(1, 3), 5};
  CHECK(Dot(a, b) == Rational(8, 3));
  CHECK(Sum(a) == Rational(5, 2));
  CHECK_THROWS_AS(Dot(a, RationalVector{1}), InvariantBreach);
  CHECK(Sign(Rational(-1, 7)) == -1);
  CHECK(Sign(Rational(0)) == 0);
}

}  // namespace
}  // namespace priming
