#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "slopes/rational.hpp"

namespace slopes {

// A Dehn-filling slope p*mu + q*lambda in canonical form: gcd(p,|q|) = 1 and
// p >= 0, with the longitude stored as (0,1) and the meridian as (1,0). The
// meridian is a first-class slope but has no place on the rational line, so
// value() and ordering reject it; callers branch on is_meridian() explicitly.
class Slope {
 public:
  Slope() = default;  // longitude

  // Canonicalizes an arbitrary coprime-or-not pair; rejects (0,0).
  static Slope make(i64 p, i64 q);

  i64 p() const { return p_; }
  i64 q() const { return q_; }

  bool is_meridian() const { return q_ == 0; }
  bool is_longitude() const { return p_ == 0; }
  bool is_integral() const { return q_ == 1 || q_ == -1; }

  Rational value() const;  // p/q as an exact rational; throws on the meridian

  // Rewriting mu' = mu - n*lambda sends p*mu + q*lambda to p*mu' + (q+np)*lambda.
  // The longitude is fixed; the meridian maps to (1, n).
  Slope change_meridian(i64 n) const;

  // "p/q" with the sign carried on the numerator ("-3/1"); bare integers are
  // accepted on input as "m" == "m/1".
  std::string str() const;
  static Slope parse(std::string_view text);

  friend bool operator==(const Slope& a, const Slope& b) = default;

 private:
  i64 p_ = 0;
  i64 q_ = 1;
};

// Total order matching the rational values; the meridian is unordered and
// comparing it throws std::domain_error.
std::strong_ordering compare(const Slope& a, const Slope& b);

// Strict-weak-order functor for sorted containers of non-meridian slopes.
struct SlopeValueLess {
  bool operator()(const Slope& a, const Slope& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
};

// The canonical slope whose value is the given rational.
Slope slope_from_value(const Rational& v);

}  // namespace slopes
