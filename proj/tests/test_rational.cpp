#include "doctest.h"

#include "atomreach/error.hpp"
#include "atomreach/rational.hpp"

using namespace atomreach;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("1/2").str() == "1/2");
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("-0").str() == "0");
  CHECK(Rational::parse("42").str() == "42");
  CHECK(Rational::parse("123456789012345678901234567890/2").str() ==
        "61728394506172839450617283945");
}

TEST_CASE("rational comparison is exact") {
  CHECK(Rational::parse("1/2") < Rational::parse("2/3"));
  CHECK(Rational::parse("2/3") <= Rational::parse("2/3"));
  CHECK(Rational::parse("2/4") == Rational::parse("1/2"));
  CHECK(Rational::parse("-1/2") < Rational::parse("-1/3"));
  CHECK(Rational::parse("-5") < Rational::parse("1/1000000"));
  // Large cross-multiplication that overflows 64 bits.
  CHECK(Rational::parse("123456789012345678/123456789012345679") <
        Rational::parse("123456789012345679/123456789012345680"));
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("a/2"), Error);
}
