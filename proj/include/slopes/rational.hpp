#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "slopes/errors.hpp"

namespace slopes {

using i64 = std::int64_t;
using i128 = __int128;

// Exact rational on 64-bit numerator/denominator, always reduced, den > 0.
// Intermediate products run in 128 bits; results that do not fit back into
// 64 bits throw std::overflow_error instead of wrapping. Everything in this
// library stays at desk scale, so an overflow indicates a logic error in the
// caller, not a capacity problem to be worked around.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i64 n) : num_(n), den_(1) {}
  Rational(i64 n, i64 d);

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  Rational abs() const;
  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  i64 floor() const;
  i64 ceil() const;

  // "n" or "n/d"; parse accepts an optional leading sign on either part.
  std::string str() const;
  static Rational parse(std::string_view text);

  // Reduces a 128-bit quotient and narrows; shared with interval math.
  static Rational from_i128(i128 n, i128 d);

 private:
  i64 num_ = 0;
  i64 den_ = 1;
};

inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Endpoint of an interval: a rational or one of the two infinities.
class ExtendedRational {
 public:
  static ExtendedRational neg_inf() { return ExtendedRational(-1, Rational(0)); }
  static ExtendedRational pos_inf() { return ExtendedRational(+1, Rational(0)); }
  static ExtendedRational finite(const Rational& r) { return ExtendedRational(0, r); }

  bool is_finite() const { return kind_ == 0; }
  bool is_neg_inf() const { return kind_ < 0; }
  bool is_pos_inf() const { return kind_ > 0; }
  const Rational& value() const;  // throws if infinite

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) = default;
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

  std::string str() const;  // "-inf" / "inf" / exact fraction
  static ExtendedRational parse(std::string_view text);

 private:
  ExtendedRational(int kind, const Rational& v) : kind_(kind), value_(v) {}
  int kind_ = 0;
  Rational value_;
};

// Interval over the extended rational line with per-endpoint open/closed
// flags. Construction rejects empty and degenerate-open intervals, so a
// RationalInterval is always a nonempty set. Infinite endpoints are open.
class RationalInterval {
 public:
  static RationalInterval make(ExtendedRational lo, ExtendedRational hi,
                               bool lo_open, bool hi_open);
  static RationalInterval open(const Rational& lo, const Rational& hi);
  static RationalInterval closed(const Rational& lo, const Rational& hi);
  static RationalInterval whole_line();

  const ExtendedRational& lo() const { return lo_; }
  const ExtendedRational& hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }

  bool bounded() const { return lo_.is_finite() && hi_.is_finite(); }
  Rational width() const;  // bounded only
  Rational midpoint() const;

  bool contains(const Rational& x) const;
  bool contains_interval(const RationalInterval& other) const;  // other subset of *this
  bool intersects(const RationalInterval& other) const;

  // Distance from x to the closed hull [lo, hi]; zero when x lies in it.
  // Requires the relevant endpoint to be finite on the side x falls on.
  Rational distance_to(const Rational& x) const;
  Rational distance_to_zero() const { return distance_to(Rational(0)); }

  // "(lo,hi)", "[lo,hi]", mixed brackets, endpoints exact or "-inf"/"inf".
  std::string str() const;
  static RationalInterval parse(std::string_view text);

  friend bool operator==(const RationalInterval& a, const RationalInterval& b) = default;

 private:
  RationalInterval() : lo_(ExtendedRational::neg_inf()), hi_(ExtendedRational::pos_inf()) {}
  ExtendedRational lo_;
  ExtendedRational hi_;
  bool lo_open_ = true;
  bool hi_open_ = true;
};

}  // namespace slopes
