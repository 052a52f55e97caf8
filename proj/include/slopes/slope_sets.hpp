#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopes/slope.hpp"

namespace slopes {

// Symbolic description of one of the arithmetic slope sets.
//
//   Z            all integers
//   Mgn(g,n)     (1/n) * { m + 1/s : s != 0, m odd, |m| <= 2g-1 }
//   Mg(g)        Z union of Mgn(g,n) over n >= 1
//   Mxn(x,k,n)   same as Mgn with m ranging over all integers |m| <= x/k
//   Mx(x,k)      Z union of Mxn(x,k,n) over n >= 1
//   L1           { p/(1+n*p), n >= 0, p >= 1 } and mirror images:
//                exactly |q| == 1 (mod p) with p >= 1
//   Lg(g>=2)     (2g-1)*|q| = 1 + n*p for some n >= 1
//
// The L sets collect the slopes where the branched-surface Euler-class
// congruence holds; the M sets are the supersets carved out by the norm
// bound. Slope 0 fails the L criteria (p >= 1), even though every other
// integer lies in L1.
class SlopeSetDescriptor {
 public:
  enum class Kind { integers, mgn, mg, mxn, mx, l1, lg };

  static SlopeSetDescriptor integers();
  static SlopeSetDescriptor mgn(i64 g, i64 n);
  static SlopeSetDescriptor mg(i64 g);
  static SlopeSetDescriptor mxn(i64 x, i64 k, i64 n);
  static SlopeSetDescriptor mx(i64 x, i64 k);
  static SlopeSetDescriptor l1();
  static SlopeSetDescriptor lg(i64 g);

  Kind kind() const { return kind_; }
  i64 g() const { return g_; }
  i64 n() const { return n_; }
  i64 x() const { return x_; }
  i64 k() const { return k_; }

  bool is_l_set() const { return kind_ == Kind::l1 || kind_ == Kind::lg; }

  // Canonical text: "Z", "M:g=2,n=1", "M:g=2", "Mx:x=4,k=2", "Mx:x=4,k=2,n=3",
  // "L:g=1", "L:g=2".
  std::string str() const;
  static SlopeSetDescriptor parse(std::string_view text);

  friend bool operator==(const SlopeSetDescriptor&, const SlopeSetDescriptor&) = default;

 private:
  SlopeSetDescriptor(Kind kind, i64 g, i64 n, i64 x, i64 k)
      : kind_(kind), g_(g), n_(n), x_(x), k_(k) {}
  Kind kind_;
  i64 g_ = 0, n_ = 0, x_ = 0, k_ = 0;
};

// Exact membership by closed form. The meridian is rejected: these sets live
// in Q.
bool contains(const SlopeSetDescriptor& desc, const Slope& s);

// The integer offsets m of the level-1 series m + 1/s of an M-type set
// (odd |m| <= 2g-1, or every |m| <= x/k). The scaled points m/n are the
// accumulation points of level n.
std::vector<i64> series_offsets(const SlopeSetDescriptor& desc);

// Independent membership decision by bounded exhaustive search over the
// defining parameters, implemented with no decision logic shared with
// contains(). Used to cross-check contains() everywhere.
bool oracle_contains(const SlopeSetDescriptor& desc, const Slope& s);

struct EnumerationWindow {
  RationalInterval interval;
  i64 max_denominator = 1;
  std::optional<i64> max_level;  // the n of Mgn/Mxn unions and of L sets
};

// Exactly the members inside the window with |q| <= max_denominator (and
// union level <= max_level when given; integers count as level 0), sorted
// ascending, duplicate-free.
std::vector<Slope> enumerate_set(const SlopeSetDescriptor& desc, const EnumerationWindow& w);

// The level of s inside an L set: the unique n >= 0 with
// (2g-1)*|q| = 1 + n*p, or nullopt for non-members.
std::optional<i64> l_set_level(const SlopeSetDescriptor& desc, const Slope& s);

struct InclusionReport {
  SlopeSetDescriptor inner;
  SlopeSetDescriptor outer;
  i64 checked = 0;
  std::vector<Slope> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every enumerated member of `inner` lies in `outer`.
InclusionReport verify_inclusion(const SlopeSetDescriptor& inner,
                                 const SlopeSetDescriptor& outer,
                                 const EnumerationWindow& w);

// Property suite for the structural facts relating the L and M sets:
// inclusions, the level-1 slice equalities, integer extremes, and bounds.
struct LemmaReport {
  struct Entry {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
};

LemmaReport run_lemma_suite(i64 g_max = 3, i64 series_max = 100);

}  // namespace slopes
