#include "slopes/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace slopes {

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::overflow_error("rational arithmetic exceeded 64-bit range");
  return static_cast<i64>(v);
}

i64 parse_i64(std::string_view s) {
  if (s.empty()) throw parse_error("empty integer literal");
  if (s.front() == '+') s.remove_prefix(1);
  i64 out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw parse_error("invalid integer literal '" + std::string(s) + "'");
  return out;
}

}  // namespace

Rational::Rational(i64 n, i64 d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.num_ < 0) r.num_ = narrow(-i128(r.num_));
  return r;
}

Rational Rational::operator-() const { return from_i128(-i128(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                             i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                             i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("division of rational by zero");
  return Rational::from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = i128(a.num_) * b.den_;
  i128 rhs = i128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

i64 Rational::floor() const {
  i64 q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

i64 Rational::ceil() const {
  i64 q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_i64(text));
  i64 n = parse_i64(text.substr(0, slash));
  i64 d = parse_i64(text.substr(slash + 1));
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

const Rational& ExtendedRational::value() const {
  if (kind_ != 0) throw std::domain_error("infinite endpoint has no rational value");
  return value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != 0) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

std::string ExtendedRational::str() const {
  if (kind_ < 0) return "-inf";
  if (kind_ > 0) return "inf";
  return value_.str();
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  if (text == "inf" || text == "+inf") return pos_inf();
  return finite(Rational::parse(text));
}

RationalInterval RationalInterval::make(ExtendedRational lo, ExtendedRational hi,
                                        bool lo_open, bool hi_open) {
  if (!lo.is_finite()) lo_open = true;
  if (!hi.is_finite()) hi_open = true;
  if (lo.is_pos_inf() || hi.is_neg_inf() || hi < lo)
    throw std::invalid_argument("interval endpoints out of order");
  if (lo == hi && (lo_open || hi_open))
    throw std::invalid_argument("degenerate interval with an open endpoint");
  RationalInterval r;
  r.lo_ = lo;
  r.hi_ = hi;
  r.lo_open_ = lo_open;
  r.hi_open_ = hi_open;
  return r;
}

RationalInterval RationalInterval::open(const Rational& lo, const Rational& hi) {
  return make(ExtendedRational::finite(lo), ExtendedRational::finite(hi), true, true);
}

RationalInterval RationalInterval::closed(const Rational& lo, const Rational& hi) {
  return make(ExtendedRational::finite(lo), ExtendedRational::finite(hi), false, false);
}

RationalInterval RationalInterval::whole_line() {
  return make(ExtendedRational::neg_inf(), ExtendedRational::pos_inf(), true, true);
}

Rational RationalInterval::width() const { return hi_.value() - lo_.value(); }

Rational RationalInterval::midpoint() const {
  return (lo_.value() + hi_.value()) / Rational(2);
}

bool RationalInterval::contains(const Rational& x) const {
  ExtendedRational p = ExtendedRational::finite(x);
  if (p < lo_ || (p == lo_ && lo_open_)) return false;
  if (hi_ < p || (p == hi_ && hi_open_)) return false;
  return true;
}

bool RationalInterval::contains_interval(const RationalInterval& other) const {
  // Lower side: other must not start before *this, and may share an open/closed
  // boundary only when *this admits it.
  if (other.lo_ < lo_) return false;
  if (other.lo_ == lo_ && lo_open_ && !other.lo_open_) return false;
  if (hi_ < other.hi_) return false;
  if (other.hi_ == hi_ && hi_open_ && !other.hi_open_) return false;
  return true;
}

bool RationalInterval::intersects(const RationalInterval& other) const {
  const ExtendedRational& max_lo = lo_ < other.lo_ ? other.lo_ : lo_;
  const ExtendedRational& min_hi = hi_ < other.hi_ ? hi_ : other.hi_;
  if (max_lo < min_hi) return true;  // rationals are dense
  if (min_hi < max_lo) return false;
  if (!max_lo.is_finite()) return false;
  const Rational& x = max_lo.value();
  return contains(x) && other.contains(x);
}

Rational RationalInterval::distance_to(const Rational& x) const {
  ExtendedRational p = ExtendedRational::finite(x);
  if (p < lo_) return lo_.value() - x;
  if (hi_ < p) return x - hi_.value();
  return Rational(0);
}

std::string RationalInterval::str() const {
  std::string s;
  s += lo_open_ ? '(' : '[';
  s += lo_.str();
  s += ',';
  s += hi_.str();
  s += hi_open_ ? ')' : ']';
  return s;
}

RationalInterval RationalInterval::parse(std::string_view text) {
  bool lo_open = true, hi_open = true;
  if (!text.empty() && (text.front() == '(' || text.front() == '[')) {
    if (text.back() != ')' && text.back() != ']')
      throw parse_error("unbalanced interval brackets in '" + std::string(text) + "'");
    lo_open = text.front() == '(';
    hi_open = text.back() == ')';
    text = text.substr(1, text.size() - 2);
  }
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw parse_error("interval needs two comma-separated endpoints: '" + std::string(text) + "'");
  ExtendedRational lo = ExtendedRational::parse(text.substr(0, comma));
  ExtendedRational hi = ExtendedRational::parse(text.substr(comma + 1));
  try {
    return make(lo, hi, lo_open, hi_open);
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("invalid interval: ") + e.what());
  }
}

}  // namespace slopes
