#pragma once

#include <optional>
#include <vector>

#include "slopes/slope.hpp"

namespace slopes {

// Whether the Euler class of the restricted foliation vanishes in H^2 of the
// unfilled manifold. This is an input flag: the library does not compute it
// from a triangulation.
enum class Condition1 { holds, fails, unknown };

// Evaluations of the two relative Euler classes: a on the surface class [F],
// b on the meridian disk class [D]. A disk forces b = +-chi(D) = +-1.
struct RelEulerData {
  i64 a;
  i64 b;
  RelEulerData(i64 a_, i64 b_);
};

// The arithmetic data of a rational homology solid torus X:
//   k  - order of the rational longitude in H_1(X), k >= 1
//   x  - Thurston norm of a generator of H_2(X, dX); for the exterior of a
//        genus-g knot in an integer homology sphere, x = 2g-1
// plus the status of the H^2(X) vanishing condition.
struct FillingContext {
  i64 k = 1;
  i64 x = 0;
  Condition1 euler_condition_1 = Condition1::unknown;
  bool integer_homology_solid_torus = false;

  static FillingContext general(i64 k, i64 x, Condition1 c1);
  // k = 1 and H^2(X) = 0, so condition (1) holds automatically.
  static FillingContext integer_homology(i64 x);
  static FillingContext from_genus(i64 g);  // integer homology, x = 2g-1
};

enum class Vanishing { zero, nonzero, undetermined };

// ((a*q)/k - b) mod p, normalized to {0,...,p-1}. Residue 0 is the congruence
// a section of the foliation plane field must satisfy across the filling
// torus. Requires p > 0 (throws for the longitude) and k | a (throws with
// "relative class not divisible by longitude order").
i64 obstruction_residue(const RelEulerData& rel, const FillingContext& ctx, const Slope& s);

// All necessary conditions together: condition (1) not failed, k | a, and
// residue 0. False certifies the Euler class on the filling is nonzero.
bool vanishing_necessary(const RelEulerData& rel, const FillingContext& ctx, const Slope& s);

// When k = 1 and condition (1) holds the congruence is also sufficient, so
// the answer is exact; otherwise a clean pass is only "undetermined".
Vanishing vanishing_iff(const RelEulerData& rel, const FillingContext& ctx, const Slope& s);

// Values of a compatible with a taut foliation meeting a norm-realizing
// surface: |a| <= x, a == x (mod 2), k | a. Increasing order.
std::vector<i64> admissible_a(const FillingContext& ctx);

// True iff some admissible a and b in {-1,+1} satisfy the congruence. False
// certifies the slope admits no transverse-to-core zero-Euler-class taut
// foliation whose restriction meets a norm-realizing surface.
bool slope_potentially_vanishing(const FillingContext& ctx, const Slope& s);

// Searches for a meridian change n such that the rewritten slope p/(q+np) is
// non-integral and lies strictly outside the band [-x/k-1, x/k+1]; such an n
// certifies the slope is obstructed regardless of basis. Returns the n of
// smallest |n| (ties to the negative one); std::nullopt when none exists.
// Requires p > 0 and q != 0.
std::optional<i64> meridian_obstruction(const FillingContext& ctx, const Slope& s);

// For an integral nonzero slope on an integer homology solid torus (k = 1),
// a = +1 on positive slopes or a = -1 on negative slopes already forces the
// Euler class of the filled foliation to vanish. Rejects non-integral slopes
// and the longitude.
bool sufficient_integral(const Slope& s, const RelEulerData& rel);

// Exact vanishing criterion for taut foliations carried by a branched surface
// containing a minimal-genus Seifert surface: (2g-1)*|q| == 1 (mod p).
// Stated for finite slopes with p > 0; rejects longitude and meridian.
bool branched_surface_vanishing(i64 g, const Slope& s);

// Finitely generated abelian group in invariant-factor form d1 | d2 | ... dm.
struct AbelianGroup {
  i64 rank;
  std::vector<i64> invariant_factors;
  AbelianGroup(std::vector<i64> factors, i64 rank_);
};

// True iff the group is a (possibly trivial) direct sum of Z/2, in which case
// doubling is the zero map and every tangent-plane-field Euler class in it
// vanishes.
bool z2_forces_zero(const AbelianGroup& h2);

// Thurston norm zero leaves no admissible nonzero a, so no filling slope
// carries a transverse-to-core taut foliation with zero Euler class.
bool thurston_zero_guard(const FillingContext& ctx);

}  // namespace slopes
