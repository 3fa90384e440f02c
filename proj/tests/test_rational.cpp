#include <doctest.h>

#include "tcgen/rational.hpp"

using namespace tcgen;

TEST_CASE("exact arithmetic") {
  Q01 a = Q01::of(2, 5);
  CHECK((a * a).str() == "4/25");
  CHECK(Q01::of(9, 10).add_clamped(Q01::of(9, 10)) == Q01::one());
  CHECK(Q01::of(1, 10).sub_floored(Q01::of(3, 10)) == Q01::zero());
  CHECK(Q01::of(1, 3) + Q01::of(1, 6) == Q01::of(1, 2));
  CHECK_THROWS_AS(Q01::of(9, 10) + Q01::of(9, 10), RangeError);
  CHECK_THROWS_AS(Q01::of(1, 10) - Q01::of(3, 10), RangeError);
}

TEST_CASE("ordering by cross-multiplication") {
  // 12*2 = 24 < 25 = 25*1
  CHECK(Q01::of(12, 25) < Q01::of(1, 2));
  CHECK(Q01::of(1, 2) < Q01::of(2, 3));
  CHECK(min(Q01::of(2, 3), Q01::of(1, 2)) == Q01::of(1, 2));
  CHECK(max(Q01::of(2, 3), Q01::of(1, 2)) == Q01::of(2, 3));
}

TEST_CASE("canonical lowest terms") {
  CHECK(Q01::of(2, 4) == Q01::of(1, 2));
  CHECK(Q01::of(2, 4).num() == 1);
  CHECK(Q01::of(2, 4).den() == 2);
  CHECK(Q01::of(0, 7).str() == "0");
}

TEST_CASE("parse") {
  CHECK(Q01::parse("2/5") == Q01::of(2, 5));
  CHECK(Q01::parse("2/4") == Q01::of(1, 2));
  CHECK(Q01::parse("1") == Q01::one());
  CHECK_THROWS_AS(Q01::parse("7/5"), RangeError);
  CHECK_THROWS_AS(Q01::parse("2"), RangeError);
  CHECK_THROWS_AS(Q01::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Q01::parse("-1/2"), ParseError);
  CHECK_THROWS_AS(Q01::parse("+1/2"), ParseError);
  CHECK_THROWS_AS(Q01::parse("1 / 2"), ParseError);
  CHECK_THROWS_AS(Q01::parse(""), ParseError);
  CHECK_THROWS_AS(Q01::parse("a/b"), ParseError);
}

TEST_CASE("parse round-trips through str") {
  for (long long den = 1; den <= 12; ++den) {
    for (long long num = 0; num <= den; ++num) {
      Q01 v = Q01::of(num, den);
      CHECK(Q01::parse(v.str()) == v);
    }
  }
}

TEST_CASE("signed rational text for slopes and intercepts") {
  CHECK(parse_signed_rational("-1/2") == BigRational(-1, 2));
  CHECK(parse_signed_rational("3") == BigRational(3));
  CHECK(rational_str(BigRational(-61, 72)) == "-61/72");
  CHECK_THROWS_AS(parse_signed_rational("1/"), ParseError);
}

TEST_CASE("multiplication reconstructs integer cross products") {
  for (long long d1 = 1; d1 <= 9; ++d1) {
    for (long long n1 = 0; n1 <= d1; ++n1) {
      for (long long d2 = 1; d2 <= 9; ++d2) {
        for (long long n2 = 0; n2 <= d2; ++n2) {
          Q01 p = Q01::of(n1, d1) * Q01::of(n2, d2);
          CHECK(p.num() * (d1 * d2) == p.den() * (n1 * n2));
        }
      }
    }
  }
}
