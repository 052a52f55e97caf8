#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>

#include "slopes/euler.hpp"
#include "test_util.hpp"

using namespace slopes;

namespace {

const FillingContext kGenusOne = FillingContext::from_genus(1);  // k=1, x=1

// Brute-force reading of the congruence: does a*q = b + N*p hold for some
// integer N? |N| <= |a*q| + 1 suffices because |b| = 1 and p >= 1.
bool congruence_by_search(i64 a, i64 b, i64 p, i64 q) {
  i64 bound = std::abs(a * q) + 1;
  for (i64 N = -bound; N <= bound; ++N)
    if (a * q == b + N * p) return true;
  return false;
}

}  // namespace

TEST_CASE("obstruction residue examples") {
  FillingContext k1 = FillingContext::general(1, 3, Condition1::holds);
  for (i64 m = 1; m <= 20; ++m)
    CHECK(obstruction_residue(RelEulerData(1, 1), k1, Slope::make(m, 1)) == 0);
  CHECK(obstruction_residue(RelEulerData(3, 1), k1, Slope::make(5, 2)) == 0);
  CHECK(obstruction_residue(RelEulerData(2, 1), k1, Slope::make(4, 1)) == 1);
}

TEST_CASE("obstruction residue errors") {
  FillingContext k2 = FillingContext::general(2, 4, Condition1::holds);
  CHECK_THROWS_WITH_AS(obstruction_residue(RelEulerData(3, 1), k2, Slope::make(5, 2)),
                       "relative class not divisible by longitude order", std::domain_error);
  CHECK_THROWS_WITH_AS(obstruction_residue(RelEulerData(1, 1), kGenusOne, Slope::make(0, 1)),
                       "criterion undefined for the longitude", std::domain_error);
}

TEST_CASE("residue zero iff the linear equation has a solution (k=1)") {
  for (int i = 0; i < 4000; ++i) {
    i64 a = testing::random_int(-9, 9);
    i64 b = testing::random_int(0, 1) ? 1 : -1;
    i64 p = testing::random_int(1, 40);
    i64 q = testing::random_int(-40, 40);
    FillingContext ctx = FillingContext::general(1, 5, Condition1::holds);
    Slope s = Slope::make(p, q == 0 ? 1 : q);
    i64 r = obstruction_residue(RelEulerData(a, b), ctx, s);
    CHECK((r == 0) == congruence_by_search(a, b, s.p(), s.q()));
  }
}

TEST_CASE("necessary conditions") {
  CHECK(vanishing_necessary(RelEulerData(1, 1), FillingContext::general(1, 1, Condition1::holds),
                            Slope::make(7, 1)));
  CHECK_FALSE(vanishing_necessary(RelEulerData(0, 1),
                                  FillingContext::general(1, 0, Condition1::holds),
                                  Slope::make(5, 2)));
  CHECK_FALSE(vanishing_necessary(RelEulerData(2, 1),
                                  FillingContext::general(2, 4, Condition1::fails),
                                  Slope::make(3, 1)));
  // k not dividing a is a failed necessary condition, not an error here.
  CHECK_FALSE(vanishing_necessary(RelEulerData(3, 1),
                                  FillingContext::general(2, 4, Condition1::holds),
                                  Slope::make(3, 1)));
}

TEST_CASE("vanishing verdicts") {
  FillingContext holds1 = FillingContext::general(1, 3, Condition1::holds);
  CHECK(vanishing_iff(RelEulerData(3, 1), holds1, Slope::make(5, 2)) == Vanishing::zero);
  CHECK(vanishing_iff(RelEulerData(3, 1), holds1, Slope::make(4, 1)) == Vanishing::nonzero);
  // k > 1: the conditions are only necessary.
  FillingContext k2 = FillingContext::general(2, 4, Condition1::holds);
  CHECK(vanishing_iff(RelEulerData(2, 1), k2, Slope::make(1, 1)) == Vanishing::undetermined);
  // k = 1 but condition (1) unknown: a clean congruence cannot conclude zero.
  FillingContext unknown1 = FillingContext::general(1, 3, Condition1::unknown);
  CHECK(vanishing_iff(RelEulerData(3, 1), unknown1, Slope::make(5, 2)) ==
        Vanishing::undetermined);
}

TEST_CASE("admissible relative classes") {
  CHECK(admissible_a(FillingContext::general(1, 3, Condition1::holds)) ==
        std::vector<i64>{-3, -1, 1, 3});
  CHECK(admissible_a(FillingContext::general(1, 0, Condition1::holds)) == std::vector<i64>{0});
  CHECK(admissible_a(FillingContext::general(2, 4, Condition1::holds)) ==
        std::vector<i64>{-4, -2, 0, 2, 4});
  CHECK(admissible_a(FillingContext::general(3, 3, Condition1::holds)) ==
        std::vector<i64>{-3, 3});
}

TEST_CASE("admissible classes are symmetric about 0") {
  for (i64 x = 0; x <= 9; ++x)
    for (i64 k = 1; k <= 4; ++k) {
      auto as = admissible_a(FillingContext::general(k, x, Condition1::holds));
      for (i64 a : as)
        CHECK(std::find(as.begin(), as.end(), -a) != as.end());
    }
}

TEST_CASE("potentially vanishing slopes") {
  CHECK_FALSE(slope_potentially_vanishing(kGenusOne, Slope::make(5, 12)));
  for (i64 m = 1; m <= 30; ++m)
    CHECK(slope_potentially_vanishing(kGenusOne, Slope::make(m, 1)));
  // 7/2 with x=3: a=3, b=-1 solves 3*2 == -1 (mod 7), so the slope passes.
  FillingContext x3 = FillingContext::general(1, 3, Condition1::holds);
  CHECK(congruence_by_search(3, -1, 7, 2));
  CHECK(slope_potentially_vanishing(x3, Slope::make(7, 2)));
}

TEST_CASE("potentially vanishing agrees with the brute-force search") {
  for (const Slope& s : testing::slope_sweep(40, 40)) {
    if (s.p() == 0) continue;
    for (i64 x : {1, 2, 3, 4}) {
      FillingContext ctx = FillingContext::general(1, x, Condition1::holds);
      bool expected = false;
      for (i64 a : admissible_a(ctx))
        for (i64 b : {-1, 1})
          expected = expected || congruence_by_search(a, b, s.p(), s.q());
      CHECK(slope_potentially_vanishing(ctx, s) == expected);
    }
  }
}

TEST_CASE("potentially vanishing is monotone in x within a parity class") {
  for (const Slope& s : testing::slope_sweep(30, 30)) {
    if (s.p() == 0) continue;
    for (i64 x : {1, 2, 3, 4}) {
      FillingContext small = FillingContext::general(1, x, Condition1::holds);
      FillingContext big = FillingContext::general(1, x + 2, Condition1::holds);
      if (slope_potentially_vanishing(small, s))
        CHECK(slope_potentially_vanishing(big, s));
    }
  }
}

TEST_CASE("meridian obstruction examples") {
  CHECK(meridian_obstruction(kGenusOne, Slope::make(5, 12)) == std::optional<i64>(-2));
  CHECK(Slope::make(5, 12).change_meridian(-2) == Slope::make(5, 2));
  CHECK(meridian_obstruction(kGenusOne, Slope::make(3, 1)) == std::nullopt);
  // 9/2 with x=3 already sits outside the band [-4,4] and is non-integral,
  // so the identity change n=0 witnesses the obstruction.
  FillingContext x3 = FillingContext::general(1, 3, Condition1::holds);
  CHECK(meridian_obstruction(x3, Slope::make(9, 2)) == std::optional<i64>(0));
  CHECK_THROWS_AS(meridian_obstruction(kGenusOne, Slope::make(1, 0)), std::domain_error);
}

TEST_CASE("an obstructing meridian change kills every admissible congruence") {
  for (const Slope& s : testing::slope_sweep(100, 60)) {
    if (s.p() == 0 || s.q() == 0) continue;
    for (auto [x, k] : {std::pair<i64, i64>{1, 1}, {3, 1}, {4, 2}}) {
      FillingContext ctx = FillingContext::general(k, x, Condition1::holds);
      if (meridian_obstruction(ctx, s).has_value())
        CHECK_FALSE(slope_potentially_vanishing(ctx, s));
    }
  }
}

TEST_CASE("sufficient condition on integral slopes") {
  CHECK(sufficient_integral(Slope::make(3, 1), RelEulerData(1, 1)));
  CHECK(sufficient_integral(Slope::make(3, -1), RelEulerData(-1, 1)));
  CHECK_FALSE(sufficient_integral(Slope::make(3, 1), RelEulerData(-1, 1)));
  CHECK_FALSE(sufficient_integral(Slope::make(3, -1), RelEulerData(1, 1)));
  CHECK_THROWS_AS(sufficient_integral(Slope::make(5, 2), RelEulerData(1, 1)),
                  std::domain_error);
  CHECK_THROWS_AS(sufficient_integral(Slope::make(0, 1), RelEulerData(1, 1)),
                  std::domain_error);
}

TEST_CASE("sufficient condition implies the exact criterion") {
  FillingContext ihs = FillingContext::integer_homology(1);
  for (i64 m = -20; m <= 20; ++m) {
    if (m == 0) continue;
    Slope s = Slope::make(m, 1);
    RelEulerData rel(m > 0 ? 1 : -1, 1);
    CHECK(sufficient_integral(s, rel));
    CHECK(vanishing_iff(rel, ihs, s) == Vanishing::zero);
  }
}

TEST_CASE("branched-surface criterion") {
  for (i64 m = 1; m <= 25; ++m) {
    CHECK(branched_surface_vanishing(1, Slope::make(m, 1)));
    CHECK(branched_surface_vanishing(1, Slope::make(m, -1)));
  }
  CHECK(branched_surface_vanishing(2, Slope::make(2, 1)));
  CHECK_FALSE(branched_surface_vanishing(2, Slope::make(3, 1)));
  CHECK(branched_surface_vanishing(2, Slope::make(5, 2)));
  CHECK_THROWS_AS(branched_surface_vanishing(2, Slope::make(0, 1)), std::domain_error);
  CHECK_THROWS_AS(branched_surface_vanishing(2, Slope::make(1, 0)), std::domain_error);
}

TEST_CASE("branched-surface criterion matches the congruence with a = -chi(F)") {
  // The carried foliation realizes a = 2g-1 on positive slopes and -(2g-1) on
  // negative ones, with b = 1 and k = 1.
  for (i64 g = 1; g <= 4; ++g) {
    FillingContext ctx = FillingContext::from_genus(g);
    for (const Slope& s : testing::slope_sweep(60, 60)) {
      if (s.p() == 0) continue;
      RelEulerData rel(s.q() > 0 ? 2 * g - 1 : -(2 * g - 1), 1);
      CHECK(branched_surface_vanishing(g, s) ==
            (vanishing_iff(rel, ctx, s) == Vanishing::zero));
    }
  }
}

TEST_CASE("Z2 torsion forcing") {
  CHECK(z2_forces_zero(AbelianGroup({}, 0)));
  CHECK(z2_forces_zero(AbelianGroup({2}, 0)));
  CHECK(z2_forces_zero(AbelianGroup({2, 2}, 0)));
  CHECK_FALSE(z2_forces_zero(AbelianGroup({4}, 0)));
  CHECK_FALSE(z2_forces_zero(AbelianGroup({2}, 1)));
  CHECK_FALSE(z2_forces_zero(AbelianGroup({2, 4}, 0)));
  CHECK_THROWS_AS(AbelianGroup({4, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroup({1}, 0), std::invalid_argument);
}

TEST_CASE("norm-zero guard") {
  CHECK(thurston_zero_guard(FillingContext::general(1, 0, Condition1::holds)));
  CHECK_FALSE(thurston_zero_guard(kGenusOne));
  CHECK_FALSE(thurston_zero_guard(FillingContext::general(2, 3, Condition1::holds)));
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(FillingContext::general(0, 1, Condition1::holds), std::invalid_argument);
  CHECK_THROWS_AS(FillingContext::general(1, -1, Condition1::holds), std::invalid_argument);
  CHECK_THROWS_AS(RelEulerData(1, 2), std::invalid_argument);
  FillingContext ihs = FillingContext::integer_homology(3);
  CHECK(ihs.k == 1);
  CHECK(ihs.euler_condition_1 == Condition1::holds);
  CHECK(ihs.integer_homology_solid_torus);
  CHECK(FillingContext::from_genus(2).x == 3);
}
