#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopes/slope_sets.hpp"

namespace slopes {

// Knot families whose exteriors carry taut foliations built over a branched
// surface containing a minimal Seifert surface, each detecting a known open
// interval of filling slopes.
enum class KnotFamily {
  alternating_nonplanar,
  alternating_positive_planar,
  alternating_negative_planar,
  two_bridge_hyperbolic,
  fibered_hyperbolic,
  figure_eight,
  general_s3,
};

// Sign of the closed orbit on the boundary torus for fibered knots; picks the
// side of the detection interval.
enum class Degeneracy { negative, positive, meridional };

class KnotDescriptor {
 public:
  static KnotDescriptor figure_eight();
  static KnotDescriptor alternating_nonplanar(i64 genus);
  static KnotDescriptor alternating_positive_planar(i64 genus);
  static KnotDescriptor alternating_negative_planar(i64 genus);
  static KnotDescriptor two_bridge_hyperbolic(i64 genus);
  static KnotDescriptor fibered_hyperbolic(Degeneracy d, i64 genus);
  // The detection interval of a general knot in S^3 is an open interval
  // around 0 and must be supplied.
  static KnotDescriptor general_s3(i64 genus, const RationalInterval& interval);

  KnotFamily family() const { return family_; }
  i64 genus() const { return genus_; }
  Degeneracy degeneracy() const;                 // fibered only
  const RationalInterval& stored_interval() const;  // general_s3 only

  // Compact text form: "fig8", "alt:nonplanar:g=2", "alt:posplanar:g=1",
  // "alt:negplanar:g=1", "twobridge:g=2", "fibered:neg:g=3",
  // "general:g=2:interval=(-1/2,1/2)".
  std::string str() const;
  static KnotDescriptor parse(std::string_view text);

  friend bool operator==(const KnotDescriptor&, const KnotDescriptor&) = default;

 private:
  KnotDescriptor() = default;
  KnotFamily family_ = KnotFamily::figure_eight;
  i64 genus_ = 1;
  std::optional<Degeneracy> degeneracy_;
  std::optional<RationalInterval> interval_;
};

// The open interval of slopes strongly detected by the family's known taut
// foliations.
RationalInterval foliation_interval(const KnotDescriptor& knot);

// One-sided conclusion for a single filling slope. lo_detected = false never
// means "not left-orderable": it only means this chain of criteria does not
// reach the slope (other detection methods may).
struct Verdict {
  Slope slope;
  bool foliation_detected = false;  // slope inside the family's interval
  bool euler_zero = false;          // branched-surface congruence holds
  bool lo_detected = false;         // conjunction of the two above
  std::vector<std::string> provenance;  // rules applied, in order
};

Verdict lo_verdict(const KnotDescriptor& knot, const Slope& s);

// All slopes in the window with lo_detected = true; equals the L-set
// enumeration intersected with the detection interval.
std::vector<Slope> lo_slopes(const KnotDescriptor& knot, const EnumerationWindow& w);

}  // namespace slopes
