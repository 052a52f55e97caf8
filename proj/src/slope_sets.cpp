#include "slopes/slope_sets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace slopes {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

SlopeSetDescriptor SlopeSetDescriptor::integers() {
  return SlopeSetDescriptor(Kind::integers, 0, 0, 0, 0);
}

SlopeSetDescriptor SlopeSetDescriptor::mgn(i64 g, i64 n) {
  require(g >= 1, "M(g,n) needs g >= 1");
  require(n >= 1, "M(g,n) needs n >= 1");
  return SlopeSetDescriptor(Kind::mgn, g, n, 0, 0);
}

SlopeSetDescriptor SlopeSetDescriptor::mg(i64 g) {
  require(g >= 1, "M(g) needs g >= 1");
  return SlopeSetDescriptor(Kind::mg, g, 0, 0, 0);
}

SlopeSetDescriptor SlopeSetDescriptor::mxn(i64 x, i64 k, i64 n) {
  require(x >= 1, "Mx needs x >= 1");
  require(k >= 1, "Mx needs k >= 1");
  require(n >= 1, "Mx(n) needs n >= 1");
  return SlopeSetDescriptor(Kind::mxn, 0, n, x, k);
}

SlopeSetDescriptor SlopeSetDescriptor::mx(i64 x, i64 k) {
  require(x >= 1, "Mx needs x >= 1");
  require(k >= 1, "Mx needs k >= 1");
  return SlopeSetDescriptor(Kind::mx, 0, 0, x, k);
}

SlopeSetDescriptor SlopeSetDescriptor::l1() {
  return SlopeSetDescriptor(Kind::l1, 1, 0, 0, 0);
}

SlopeSetDescriptor SlopeSetDescriptor::lg(i64 g) {
  require(g >= 2, "L(g) needs g >= 2; use L:g=1 for the genus-one set");
  return SlopeSetDescriptor(Kind::lg, g, 0, 0, 0);
}

std::string SlopeSetDescriptor::str() const {
  switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::mgn: return "M:g=" + std::to_string(g_) + ",n=" + std::to_string(n_);
    case Kind::mg: return "M:g=" + std::to_string(g_);
    case Kind::mxn:
      return "Mx:x=" + std::to_string(x_) + ",k=" + std::to_string(k_) +
             ",n=" + std::to_string(n_);
    case Kind::mx: return "Mx:x=" + std::to_string(x_) + ",k=" + std::to_string(k_);
    case Kind::l1: return "L:g=1";
    case Kind::lg: return "L:g=" + std::to_string(g_);
  }
  throw std::logic_error("unreachable");
}

namespace {

struct KeyValues {
  std::vector<std::pair<std::string, i64>> pairs;
  i64 get(const std::string& key) const {
    for (const auto& [k, v] : pairs)
      if (k == key) return v;
    throw parse_error("missing key '" + key + "' in set descriptor");
  }
  bool has(const std::string& key) const {
    for (const auto& [k, v] : pairs)
      if (k == key) return true;
    return false;
  }
};

KeyValues parse_keyvals(std::string_view text) {
  KeyValues kv;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw parse_error("expected key=value in set descriptor, got '" + std::string(item) + "'");
    Rational v = Rational::parse(item.substr(eq + 1));
    if (!v.is_integer()) throw parse_error("set parameters must be integers");
    kv.pairs.emplace_back(std::string(item.substr(0, eq)), v.num());
  }
  return kv;
}

}  // namespace

SlopeSetDescriptor SlopeSetDescriptor::parse(std::string_view text) {
  try {
    if (text == "Z") return integers();
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
      throw parse_error("unknown set descriptor '" + std::string(text) + "'");
    std::string_view head = text.substr(0, colon);
    KeyValues kv = parse_keyvals(text.substr(colon + 1));
    if (head == "M") {
      if (kv.has("n")) return mgn(kv.get("g"), kv.get("n"));
      return mg(kv.get("g"));
    }
    if (head == "Mx") {
      if (kv.has("n")) return mxn(kv.get("x"), kv.get("k"), kv.get("n"));
      return mx(kv.get("x"), kv.get("k"));
    }
    if (head == "L") {
      i64 g = kv.get("g");
      return g == 1 ? l1() : lg(g);
    }
    throw parse_error("unknown set family '" + std::string(head) + "'");
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("invalid set descriptor: ") + e.what());
  }
}

std::vector<i64> series_offsets(const SlopeSetDescriptor& d) {
  std::vector<i64> out;
  switch (d.kind()) {
    case SlopeSetDescriptor::Kind::mgn:
    case SlopeSetDescriptor::Kind::mg: {
      for (i64 m = -(2 * d.g() - 1); m <= 2 * d.g() - 1; m += 2) out.push_back(m);
      return out;
    }
    case SlopeSetDescriptor::Kind::mxn:
    case SlopeSetDescriptor::Kind::mx: {
      i64 bound = d.x() / d.k();
      for (i64 m = -bound; m <= bound; ++m) out.push_back(m);
      return out;
    }
    default:
      throw std::invalid_argument("series offsets apply to M sets only");
  }
}

namespace {

std::vector<i64> offsets_for(const SlopeSetDescriptor& d) { return series_offsets(d); }

// s in (1/n)*{m + 1/t}  <=>  n*s - m = 1/t for some t != 0
//                       <=>  u := n*p - m*q is nonzero and divides q.
bool m_series_member(i64 n, const std::vector<i64>& offsets, const Slope& s) {
  for (i64 m : offsets) {
    i128 u = i128(n) * s.p() - i128(m) * s.q();
    if (u != 0 && i128(s.q()) % u == 0) return true;
  }
  return false;
}

}  // namespace

bool contains(const SlopeSetDescriptor& desc, const Slope& s) {
  if (s.is_meridian())
    throw std::domain_error("set membership is defined on Q; the meridian is excluded");
  switch (desc.kind()) {
    case SlopeSetDescriptor::Kind::integers:
      return s.is_integral();
    case SlopeSetDescriptor::Kind::mgn:
    case SlopeSetDescriptor::Kind::mxn:
      return m_series_member(desc.n(), offsets_for(desc), s);
    case SlopeSetDescriptor::Kind::mg:
    case SlopeSetDescriptor::Kind::mx: {
      if (s.is_integral()) return true;
      const std::vector<i64> offsets = offsets_for(desc);
      const i64 bound =
          desc.kind() == SlopeSetDescriptor::Kind::mg ? 2 * desc.g() : desc.x() / desc.k() + 1;
      // Levels with bound/n < |p/q| cannot contain the value.
      i64 abs_q = s.q() < 0 ? -s.q() : s.q();
      i64 n_hi = (Rational(bound) * Rational(abs_q) / Rational(s.p())).floor();
      for (i64 n = 1; n <= n_hi; ++n)
        if (m_series_member(n, offsets, s)) return true;
      return false;
    }
    case SlopeSetDescriptor::Kind::l1: {
      if (s.p() < 1) return false;
      i64 abs_q = s.q() < 0 ? -s.q() : s.q();
      return (abs_q - 1) % s.p() == 0;
    }
    case SlopeSetDescriptor::Kind::lg: {
      if (s.p() < 1) return false;
      i64 abs_q = s.q() < 0 ? -s.q() : s.q();
      i128 lhs = i128(2 * desc.g() - 1) * abs_q;
      return lhs > 1 && lhs % s.p() == 1 % i128(s.p());
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<i64> l_set_level(const SlopeSetDescriptor& desc, const Slope& s) {
  if (!desc.is_l_set()) throw std::invalid_argument("l_set_level applies to L sets only");
  if (!contains(desc, s)) return std::nullopt;
  i64 coeff = desc.kind() == SlopeSetDescriptor::Kind::l1 ? 1 : 2 * desc.g() - 1;
  i64 abs_q = s.q() < 0 ? -s.q() : s.q();
  return (coeff * abs_q - 1) / s.p();
}

namespace {

void insert_integers(const RationalInterval& interval, std::set<Rational>& out,
                     bool skip_zero = false) {
  if (!interval.bounded())
    throw std::domain_error("enumeration of an unbounded slope set needs a bounded window");
  i64 lo = interval.lo().value().ceil();
  i64 hi = interval.hi().value().floor();
  for (i64 z = lo; z <= hi; ++z) {
    if (skip_zero && z == 0) continue;
    if (interval.contains(Rational(z))) out.insert(Rational(z));
  }
}

void insert_m_series_level(const SlopeSetDescriptor& shape, i64 n,
                           const EnumerationWindow& w, std::set<Rational>& out) {
  const i64 D = w.max_denominator;
  for (i64 m : offsets_for(shape)) {
    for (i64 t = -D; t <= D; ++t) {
      if (t == 0) continue;
      // (m + 1/t)/n; the reduced denominator is at least |t|, so |t| <= D
      // covers every member under the denominator cap.
      Rational v = Rational::from_i128(i128(m) * t + 1, i128(n) * t);
      if (v.den() <= D && w.interval.contains(v)) out.insert(v);
    }
  }
}

std::vector<Slope> to_sorted_slopes(const std::set<Rational>& values) {
  std::vector<Slope> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(slope_from_value(v));
  return out;
}

}  // namespace

std::vector<Slope> enumerate_set(const SlopeSetDescriptor& desc, const EnumerationWindow& w) {
  if (w.max_denominator < 1)
    throw std::invalid_argument("enumeration window needs max_denominator >= 1");
  std::set<Rational> values;
  const i64 level_cap = w.max_level.value_or(INT64_MAX);
  switch (desc.kind()) {
    case SlopeSetDescriptor::Kind::integers:
      insert_integers(w.interval, values);
      break;
    case SlopeSetDescriptor::Kind::mgn:
    case SlopeSetDescriptor::Kind::mxn:
      if (desc.n() <= level_cap) insert_m_series_level(desc, desc.n(), w, values);
      break;
    case SlopeSetDescriptor::Kind::mg:
    case SlopeSetDescriptor::Kind::mx: {
      insert_integers(w.interval, values);
      const i64 bound = desc.kind() == SlopeSetDescriptor::Kind::mg
                            ? 2 * desc.g()
                            : desc.x() / desc.k() + 1;
      // Nonzero members with denominator <= D have |value| >= 1/D, and level-n
      // members have |value| <= bound/n; beyond n = bound*D a level adds
      // nothing new.
      i64 n_hi = std::min<i64>(level_cap, bound * w.max_denominator);
      Rational dist0 = w.interval.distance_to_zero();
      if (!dist0.is_zero())
        n_hi = std::min<i64>(n_hi, (Rational(bound) / dist0).floor());
      for (i64 n = 1; n <= n_hi; ++n) insert_m_series_level(desc, n, w, values);
      break;
    }
    case SlopeSetDescriptor::Kind::l1: {
      insert_integers(w.interval, values, /*skip_zero=*/true);  // level 0
      for (i64 n = 1; n <= std::min<i64>(level_cap, w.max_denominator - 1); ++n) {
        for (i64 p = 1; 1 + n * p <= w.max_denominator; ++p) {
          Rational v(p, 1 + n * p);
          if (w.interval.contains(v)) values.insert(v);
          if (w.interval.contains(-v)) values.insert(-v);
        }
      }
      break;
    }
    case SlopeSetDescriptor::Kind::lg: {
      const i64 coeff = 2 * desc.g() - 1;
      for (i64 q = 1; q <= w.max_denominator; ++q) {
        const i64 target = coeff * q - 1;
        for (i64 n = 1; n <= std::min(level_cap, target); ++n) {
          if (target % n != 0) continue;
          // p and q are automatically coprime: a common divisor would divide 1.
          Rational v(target / n, q);
          if (w.interval.contains(v)) values.insert(v);
          if (w.interval.contains(-v)) values.insert(-v);
        }
      }
      break;
    }
  }
  return to_sorted_slopes(values);
}

InclusionReport verify_inclusion(const SlopeSetDescriptor& inner,
                                 const SlopeSetDescriptor& outer,
                                 const EnumerationWindow& w) {
  InclusionReport report{inner, outer, 0, {}};
  for (const Slope& s : enumerate_set(inner, w)) {
    ++report.checked;
    if (!contains(outer, s)) report.violations.push_back(s);
  }
  return report;
}

bool LemmaReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.pass; });
}

namespace {

std::string join_slopes(const std::vector<Slope>& slopes, size_t cap = 8) {
  std::string out;
  for (size_t i = 0; i < slopes.size() && i < cap; ++i) {
    if (!out.empty()) out += ' ';
    out += slopes[i].str();
  }
  if (slopes.size() > cap) out += " ...";
  return out;
}

}  // namespace

LemmaReport run_lemma_suite(i64 g_max, i64 series_max) {
  LemmaReport report;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    report.entries.push_back({std::move(name), pass, std::move(detail)});
  };

  for (i64 g = 1; g <= g_max; ++g) {
    SlopeSetDescriptor L = g == 1 ? SlopeSetDescriptor::l1() : SlopeSetDescriptor::lg(g);
    SlopeSetDescriptor M = SlopeSetDescriptor::mg(g);
    EnumerationWindow w{RationalInterval::closed(Rational(-2 * g - 2), Rational(2 * g + 2)), 50,
                        std::nullopt};
    InclusionReport inc = verify_inclusion(L, M, w);
    add("L(g=" + std::to_string(g) + ") subset of M(g=" + std::to_string(g) + ")", inc.ok(),
        inc.ok() ? std::to_string(inc.checked) + " members checked"
                 : "violations: " + join_slopes(inc.violations));

    InclusionReport zinc = verify_inclusion(SlopeSetDescriptor::integers(), M,
                                            {RationalInterval::closed(Rational(-10), Rational(10)),
                                             1, std::nullopt});
    add("Z subset of M(g=" + std::to_string(g) + ")", zinc.ok(),
        zinc.ok() ? std::to_string(zinc.checked) + " integers checked"
                  : "violations: " + join_slopes(zinc.violations));
  }

  // The level-1 slice of each L set equals the tail pieces of the level-1 M
  // series: for g = 1 the portion inside (-1,0) u (0,1), for g >= 2 the
  // portion inside (1-2g, 2-2g] u [2g-2, 2g-1).
  for (i64 g = 1; g <= g_max; ++g) {
    SlopeSetDescriptor L = g == 1 ? SlopeSetDescriptor::l1() : SlopeSetDescriptor::lg(g);
    SlopeSetDescriptor M1 = SlopeSetDescriptor::mgn(g, 1);
    EnumerationWindow w{RationalInterval::closed(Rational(-2 * g), Rational(2 * g)), series_max,
                        std::nullopt};
    std::vector<Slope> slice, tail;
    for (const Slope& s : enumerate_set(M1, w)) {
      if (l_set_level(L, s) == std::optional<i64>(1)) slice.push_back(s);
      Rational v = s.value();
      bool in_tail;
      if (g == 1) {
        in_tail = !v.is_zero() && v > Rational(-1) && v < Rational(1);
      } else {
        in_tail = (v > Rational(1 - 2 * g) && v <= Rational(2 - 2 * g)) ||
                  (v >= Rational(2 * g - 2) && v < Rational(2 * g - 1));
      }
      if (in_tail) tail.push_back(s);
    }
    bool ok = slice == tail;
    add("level-1 slice of L(g=" + std::to_string(g) + ") equals the M(g,1) tail pieces", ok,
        ok ? std::to_string(slice.size()) + " members on each side"
           : "slice " + join_slopes(slice) + " vs tail " + join_slopes(tail));
  }

  // L1 level-n slices live inside (-1/n, 0) u (0, 1/n).
  {
    bool ok = true;
    std::string bad;
    for (i64 n = 1; n <= 4 && ok; ++n) {
      EnumerationWindow w{RationalInterval::closed(Rational(-2), Rational(2)), series_max,
                          std::nullopt};
      for (const Slope& s : enumerate_set(SlopeSetDescriptor::l1(), w)) {
        if (l_set_level(SlopeSetDescriptor::l1(), s) != std::optional<i64>(n)) continue;
        Rational v = s.value();
        if (v.is_zero() || v.abs() >= Rational(1, n)) {
          ok = false;
          bad = "n=" + std::to_string(n) + " member " + s.str();
          break;
        }
      }
    }
    add("L(g=1) level-n slices inside (-1/n,1/n)", ok, bad);
  }

  // Integer members of L(g), g >= 2, are exactly the divisors of 2g-2 with
  // both signs; extremes +-(2g-2).
  for (i64 g = 2; g <= std::max<i64>(g_max, 2); ++g) {
    SlopeSetDescriptor L = SlopeSetDescriptor::lg(g);
    EnumerationWindow w{RationalInterval::closed(Rational(-2 * g), Rational(2 * g)), 1,
                        std::nullopt};
    std::vector<Slope> ints = enumerate_set(L, w);
    bool ok = !ints.empty();
    for (const Slope& s : ints) {
      i64 m = s.q() < 0 ? -s.p() : s.p();
      if (m == 0 || (2 * g - 2) % (m < 0 ? -m : m) != 0) ok = false;
    }
    if (ok) {
      ok = ints.front().value() == Rational(-(2 * g - 2)) &&
           ints.back().value() == Rational(2 * g - 2);
    }
    add("integer members of L(g=" + std::to_string(g) + ") are the divisors of " +
            std::to_string(2 * g - 2) + ", extremes +-" + std::to_string(2 * g - 2),
        ok, join_slopes(ints, 12));
  }

  // L(g) is bounded strictly between +-(2g-1) for g >= 2.
  for (i64 g = 2; g <= std::max<i64>(g_max, 2); ++g) {
    EnumerationWindow w{RationalInterval::closed(Rational(-2 * g), Rational(2 * g)),
                        g == 2 ? 500 : 200, std::nullopt};
    bool ok = true;
    std::string bad;
    for (const Slope& s : enumerate_set(SlopeSetDescriptor::lg(g), w)) {
      if (s.value().abs() >= Rational(2 * g - 1)) {
        ok = false;
        bad = s.str();
        break;
      }
    }
    add("L(g=" + std::to_string(g) + ") strictly inside (-(2g-1), 2g-1), |q| <= " +
            std::to_string(w.max_denominator),
        ok, bad);
  }

  // Scaling law: s in M(g,n) iff n*s in M(g,1).
  {
    bool ok = true;
    std::string bad;
    for (i64 g = 1; g <= g_max && ok; ++g) {
      for (i64 n = 1; n <= 4 && ok; ++n) {
        SlopeSetDescriptor dn = SlopeSetDescriptor::mgn(g, n);
        SlopeSetDescriptor d1 = SlopeSetDescriptor::mgn(g, 1);
        EnumerationWindow w{RationalInterval::closed(Rational(-2 * g), Rational(2 * g)), 40,
                            std::nullopt};
        for (const Slope& s : enumerate_set(dn, w)) {
          if (!contains(d1, slope_from_value(s.value() * Rational(n)))) {
            ok = false;
            bad = "g=" + std::to_string(g) + ",n=" + std::to_string(n) + " member " + s.str();
            break;
          }
        }
        for (const Slope& s : enumerate_set(d1, w)) {
          if (!contains(dn, slope_from_value(s.value() / Rational(n)))) {
            ok = false;
            bad = "g=" + std::to_string(g) + ",n=" + std::to_string(n) + " scaled " + s.str();
            break;
          }
        }
      }
    }
    add("scaling law: M(g,n) == (1/n) M(g,1)", ok, bad);
  }

  // Every member of M(g,n) has |value| <= 2g/n.
  {
    bool ok = true;
    std::string bad;
    for (i64 g = 1; g <= g_max && ok; ++g) {
      for (i64 n = 1; n <= 4 && ok; ++n) {
        EnumerationWindow w{RationalInterval::closed(Rational(-3 * g), Rational(3 * g)), 60,
                            std::nullopt};
        for (const Slope& s : enumerate_set(SlopeSetDescriptor::mgn(g, n), w)) {
          if (s.value().abs() > Rational(2 * g, n)) {
            ok = false;
            bad = "g=" + std::to_string(g) + ",n=" + std::to_string(n) + " member " + s.str();
            break;
          }
        }
      }
    }
    add("M(g,n) bounded by 2g/n", ok, bad);
  }

  return report;
}

}  // namespace slopes
