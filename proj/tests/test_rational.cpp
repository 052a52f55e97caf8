#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "slopes/rational.hpp"
#include "test_util.hpp"

using namespace slopes;

TEST_CASE("construction reduces and normalizes the sign") {
  CHECK(Rational(10, 24) == Rational(5, 12));
  CHECK(Rational(-5, -12) == Rational(5, 12));
  CHECK(Rational(5, -12) == Rational(-5, 12));
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(7, 1).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6, 2).floor() == 3);
  CHECK(Rational(6, 2).ceil() == 3);
}

namespace {

// Reference comparison by continued-fraction (Euclidean) descent. Never forms
// a product, so it is exact for any operand size, which makes it a fair
// independent check of the cross-multiplication path.
int cf_compare(i64 an, i64 ad, i64 bn, i64 bd) {
  bool a_neg = (an < 0);
  bool b_neg = (bn < 0);
  if (a_neg != b_neg) return a_neg ? -1 : 1;
  if (a_neg) return -cf_compare(-an, ad, -bn, bd);
  while (true) {
    i64 qa = an / ad, qb = bn / bd;
    if (qa != qb) return qa < qb ? -1 : 1;
    an -= qa * ad;
    bn -= qb * bd;
    if (an == 0 && bn == 0) return 0;
    if (an == 0) return -1;
    if (bn == 0) return 1;
    // Compare the fractional parts by comparing reciprocals, flipped.
    std::swap(an, ad);
    std::swap(bn, bd);
    std::swap(an, bn);
    std::swap(ad, bd);
  }
}

}  // namespace

TEST_CASE("ordering agrees with continued-fraction comparison on random input") {
  for (int i = 0; i < 20000; ++i) {
    i64 an = testing::random_int(-1000000, 1000000);
    i64 ad = testing::random_int(1, 1000000);
    i64 bn = testing::random_int(-1000000, 1000000);
    i64 bd = testing::random_int(1, 1000000);
    int expected = cf_compare(an, ad, bn, bd);
    auto got = Rational(an, ad) <=> Rational(bn, bd);
    CHECK((expected < 0) == (got == std::strong_ordering::less));
    CHECK((expected > 0) == (got == std::strong_ordering::greater));
    CHECK((expected == 0) == (got == std::strong_ordering::equal));
  }
}

TEST_CASE("parse and emit round-trip") {
  for (const char* text : {"0", "5", "-5", "5/12", "-5/12", "123456789/987654321"}) {
    Rational r = Rational::parse(text);
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK(Rational::parse("10/24").str() == "5/12");
  CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
  CHECK_THROWS_AS(Rational::parse("a/b"), parse_error);
  CHECK_THROWS_AS(Rational::parse(""), parse_error);
}

TEST_CASE("interval membership honors open and closed ends") {
  auto half_open = RationalInterval::parse("(0,1]");
  CHECK_FALSE(half_open.contains(Rational(0)));
  CHECK(half_open.contains(Rational(1)));
  CHECK(half_open.contains(Rational(1, 2)));
  CHECK_FALSE(half_open.contains(Rational(2)));

  auto ray = RationalInterval::parse("(-inf,0)");
  CHECK(ray.contains(Rational(-1000000)));
  CHECK_FALSE(ray.contains(Rational(0)));

  CHECK_THROWS_AS(RationalInterval::open(Rational(1), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(RationalInterval::open(Rational(2), Rational(1)), std::invalid_argument);
  CHECK(RationalInterval::closed(Rational(1), Rational(1)).contains(Rational(1)));
}

TEST_CASE("interval subset and intersection") {
  auto outer = RationalInterval::parse("(0,1)");
  CHECK(outer.contains_interval(RationalInterval::parse("(0,1)")));
  CHECK(outer.contains_interval(RationalInterval::parse("[1/3,1/2]")));
  CHECK_FALSE(outer.contains_interval(RationalInterval::parse("[0,1/2]")));
  CHECK_FALSE(outer.contains_interval(RationalInterval::parse("(1/2,2)")));

  CHECK(RationalInterval::parse("(0,1)").intersects(RationalInterval::parse("(1/2,3)")));
  CHECK_FALSE(RationalInterval::parse("(0,1)").intersects(RationalInterval::parse("(1,2)")));
  CHECK_FALSE(RationalInterval::parse("(0,1)").intersects(RationalInterval::parse("[1,2]")));
  CHECK(RationalInterval::parse("(0,1]").intersects(RationalInterval::parse("[1,2]")));
  CHECK(RationalInterval::parse("(-inf,inf)").intersects(RationalInterval::parse("[4,4]")));
}

TEST_CASE("interval distance") {
  auto iv = RationalInterval::parse("(1/3,2/5)");
  CHECK(iv.distance_to(Rational(0)) == Rational(1, 3));
  CHECK(iv.distance_to(Rational(1)) == Rational(3, 5));
  CHECK(iv.distance_to(Rational(3, 8)) == Rational(0));
  CHECK(iv.distance_to_zero() == Rational(1, 3));
}

TEST_CASE("interval parse and emit round-trip") {
  for (const char* text : {"(0,1)", "[0,1]", "(0,1]", "[-5/2,7/3)", "(-inf,inf)", "(-inf,3/4]"}) {
    auto iv = RationalInterval::parse(text);
    CHECK(RationalInterval::parse(iv.str()) == iv);
    CHECK(iv.str() == text);
  }
}
