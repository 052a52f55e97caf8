#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "slopes/slope.hpp"
#include "test_util.hpp"

using namespace slopes;

TEST_CASE("canonicalization") {
  CHECK(Slope::make(-5, -12) == Slope::make(5, 12));
  CHECK(Slope::make(10, 24) == Slope::make(5, 12));
  CHECK(Slope::make(0, -7) == Slope::make(0, 1));
  CHECK(Slope::make(0, 3).q() == 1);
  CHECK(Slope::make(-2, 0) == Slope::make(1, 0));
  CHECK_THROWS_AS(Slope::make(0, 0), std::invalid_argument);
}

TEST_CASE("canonicalization is idempotent on random input") {
  for (int i = 0; i < 5000; ++i) {
    Slope s = testing::random_slope(500, 500);
    CHECK(Slope::make(s.p(), s.q()) == s);
  }
}

TEST_CASE("special slopes") {
  Slope meridian = Slope::make(1, 0);
  Slope longitude = Slope::make(0, 1);
  CHECK(meridian.is_meridian());
  CHECK_FALSE(meridian.is_integral());
  CHECK(longitude.is_longitude());
  CHECK(longitude.is_integral());  // 0/1 is the integer 0
  CHECK(Slope::make(4, 1).is_integral());
  CHECK_FALSE(Slope::make(4, 3).is_integral());
  CHECK_THROWS_AS(meridian.value(), std::domain_error);
}

TEST_CASE("meridian change") {
  CHECK(Slope::make(5, 12).change_meridian(-2) == Slope::make(5, 2));
  CHECK(Slope::make(7, 3).change_meridian(0) == Slope::make(7, 3));
  CHECK(Slope::make(1, 0).change_meridian(3) == Slope::make(1, 3));
  CHECK(Slope::make(0, 1).change_meridian(17) == Slope::make(0, 1));
}

TEST_CASE("meridian change is a Z-action") {
  for (int i = 0; i < 5000; ++i) {
    Slope s = testing::random_slope(300, 300);
    i64 n = testing::random_int(-50, 50);
    CHECK(s.change_meridian(n).change_meridian(-n) == s);
    i64 m = testing::random_int(-50, 50);
    CHECK(s.change_meridian(n).change_meridian(m) == s.change_meridian(n + m));
  }
}

TEST_CASE("ordering") {
  CHECK(compare(Slope::make(1, 2), Slope::make(2, 3)) == std::strong_ordering::less);
  CHECK(compare(Slope::make(3, 1), Slope::make(3, 1)) == std::strong_ordering::equal);
  CHECK(compare(Slope::make(5, -2), Slope::make(0, 1)) == std::strong_ordering::less);
  CHECK_THROWS_AS(compare(Slope::make(1, 0), Slope::make(1, 1)), std::domain_error);
  CHECK_THROWS_AS(compare(Slope::make(1, 1), Slope::make(1, 0)), std::domain_error);
}

TEST_CASE("ordering matches exact rational values on random pairs") {
  for (int i = 0; i < 5000; ++i) {
    Slope a = testing::random_slope(400, 400);
    Slope b = testing::random_slope(400, 400);
    if (a.is_meridian() || b.is_meridian()) continue;
    CHECK(compare(a, b) == (a.value() <=> b.value()));
  }
}

TEST_CASE("text form") {
  CHECK(Slope::parse("5/12") == Slope::make(5, 12));
  CHECK(Slope::parse("-3/1") == Slope::make(3, -1));
  CHECK(Slope::parse("3/-1") == Slope::make(3, -1));
  CHECK(Slope::parse("1/0") == Slope::make(1, 0));
  CHECK(Slope::parse("4") == Slope::make(4, 1));
  CHECK(Slope::parse("-4") == Slope::make(4, -1));
  CHECK(Slope::make(3, -1).str() == "-3/1");
  CHECK(Slope::make(0, 1).str() == "0/1");
  CHECK(Slope::make(1, 0).str() == "1/0");
  CHECK_THROWS_AS(Slope::parse("0/0"), parse_error);
  CHECK_THROWS_AS(Slope::parse("x"), parse_error);
  CHECK_THROWS_AS(Slope::parse("1/2/3"), parse_error);
}

TEST_CASE("text round-trip on random slopes") {
  for (int i = 0; i < 5000; ++i) {
    Slope s = testing::random_slope(500, 500);
    CHECK(Slope::parse(s.str()) == s);
  }
}
