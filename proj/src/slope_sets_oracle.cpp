#include "slopes/slope_sets.hpp"

#include <stdexcept>

// Reference decision procedure for set membership. Everything here works by
// scanning the defining parameters of each set against exact bounds read off
// the defining equations, and compares candidate values by cross
// multiplication. None of the modular shortcuts used by contains() appear
// here; the two paths are meant to fail differently.

namespace slopes {

namespace {

// Does n*v - m equal 1/t for some integer t with 1 <= |t| <= t_max? Scans t
// upward and compares exactly.
bool search_unit_fraction(const Rational& target, i64 t_max) {
  if (target.is_zero()) return false;
  for (i64 t = 1; t <= t_max; ++t) {
    // target == 1/t  or  target == -1/t, cross-multiplied.
    if (i128(target.num()) * t == i128(target.den())) return true;
    if (i128(target.num()) * t == -i128(target.den())) return true;
  }
  return false;
}

bool oracle_m_series(i64 n, i64 m_lo, i64 m_hi, i64 m_step, const Slope& s) {
  const Rational v = s.value();
  for (i64 m = m_lo; m <= m_hi; m += m_step) {
    Rational target = v * Rational(n) - Rational(m);
    Rational mag = target.abs();
    if (mag.is_zero() || mag > Rational(1)) continue;  // 1/t has magnitude in (0, 1]
    i64 t_max = (Rational(1) / mag).floor();
    if (search_unit_fraction(target, t_max)) return true;
  }
  return false;
}

bool oracle_mgn(i64 g, i64 n, const Slope& s) {
  return oracle_m_series(n, -(2 * g - 1), 2 * g - 1, 2, s);
}

bool oracle_mxn(i64 x, i64 k, i64 n, const Slope& s) {
  return oracle_m_series(n, -(x / k), x / k, 1, s);
}

// Union over levels: level n is bounded by bound/n, so only levels up to
// bound*|q|/p can reach the value p/q.
bool oracle_union(i64 bound, const Slope& s, auto&& level_member) {
  if (s.value().is_integer()) return true;
  i64 abs_q = s.q() < 0 ? -s.q() : s.q();
  i64 n_hi = (Rational(bound) * Rational(abs_q) / Rational(s.p())).floor();
  for (i64 n = 1; n <= n_hi; ++n)
    if (level_member(n)) return true;
  return false;
}

// Scans n >= n_min for coeff*|q| == 1 + n*p.
bool oracle_l_search(i64 coeff, i64 n_min, const Slope& s) {
  if (s.p() < 1) return false;
  i64 abs_q = s.q() < 0 ? -s.q() : s.q();
  i128 lhs = i128(coeff) * abs_q;
  for (i64 n = n_min; i128(1) + i128(n) * s.p() <= lhs; ++n)
    if (i128(1) + i128(n) * s.p() == lhs) return true;
  return false;
}

}  // namespace

bool oracle_contains(const SlopeSetDescriptor& desc, const Slope& s) {
  if (s.is_meridian())
    throw std::domain_error("set membership is defined on Q; the meridian is excluded");
  switch (desc.kind()) {
    case SlopeSetDescriptor::Kind::integers:
      return s.value().is_integer();
    case SlopeSetDescriptor::Kind::mgn:
      return oracle_mgn(desc.g(), desc.n(), s);
    case SlopeSetDescriptor::Kind::mxn:
      return oracle_mxn(desc.x(), desc.k(), desc.n(), s);
    case SlopeSetDescriptor::Kind::mg:
      return oracle_union(2 * desc.g(), s,
                          [&](i64 n) { return oracle_mgn(desc.g(), n, s); });
    case SlopeSetDescriptor::Kind::mx:
      return oracle_union(desc.x() / desc.k() + 1, s,
                          [&](i64 n) { return oracle_mxn(desc.x(), desc.k(), n, s); });
    case SlopeSetDescriptor::Kind::l1:
      return oracle_l_search(1, 0, s);
    case SlopeSetDescriptor::Kind::lg:
      return oracle_l_search(2 * desc.g() - 1, 1, s);
  }
  throw std::logic_error("unreachable");
}

}  // namespace slopes
