#include "slopes/slope.hpp"

#include <numeric>
#include <stdexcept>

namespace slopes {

Slope Slope::make(i64 p, i64 q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope (0,0) is not a curve");
  i128 pp = p, qq = q;
  i128 g = std::gcd(p < 0 ? -(i128)p : (i128)p, q < 0 ? -(i128)q : (i128)q);
  if (g > 1) {
    pp /= g;
    qq /= g;
  }
  if (pp < 0) {
    pp = -pp;
    qq = -qq;
  }
  if (pp == 0) qq = 1;
  Slope s;
  s.p_ = static_cast<i64>(pp);
  s.q_ = static_cast<i64>(qq);
  return s;
}

Rational Slope::value() const {
  if (is_meridian()) throw std::domain_error("the meridian 1/0 has no rational value");
  return Rational(p_, q_);
}

Slope Slope::change_meridian(i64 n) const {
  i128 new_q = i128(q_) + i128(n) * p_;
  if (new_q > INT64_MAX || new_q < INT64_MIN)
    throw std::overflow_error("meridian change exceeded 64-bit range");
  return make(p_, static_cast<i64>(new_q));
}

std::string Slope::str() const {
  if (q_ < 0) return "-" + std::to_string(p_) + "/" + std::to_string(-q_);
  return std::to_string(p_) + "/" + std::to_string(q_);
}

Slope Slope::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      Rational n = Rational::parse(text);
      if (!n.is_integer()) throw parse_error("not an integer");
      return make(n.num(), 1);
    }
    Rational p = Rational::parse(text.substr(0, slash));
    Rational q = Rational::parse(text.substr(slash + 1));
    if (!p.is_integer() || !q.is_integer())
      throw parse_error("slope parts must be integers");
    return make(p.num(), q.num());
  } catch (const std::invalid_argument& e) {
    throw parse_error("invalid slope '" + std::string(text) + "': " + e.what());
  } catch (const parse_error&) {
    throw parse_error("invalid slope '" + std::string(text) + "'");
  }
}

std::strong_ordering compare(const Slope& a, const Slope& b) {
  if (a.is_meridian() || b.is_meridian())
    throw std::domain_error("the meridian 1/0 is unordered on the rational line");
  // Cross-multiplication with the sign moved onto the numerator side.
  i128 an = a.q() < 0 ? -i128(a.p()) : i128(a.p());
  i128 ad = a.q() < 0 ? -i128(a.q()) : i128(a.q());
  i128 bn = b.q() < 0 ? -i128(b.p()) : i128(b.p());
  i128 bd = b.q() < 0 ? -i128(b.q()) : i128(b.q());
  i128 lhs = an * bd;
  i128 rhs = bn * ad;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Slope slope_from_value(const Rational& v) { return Slope::make(v.num(), v.den()); }

}  // namespace slopes
