#include "slopes/density.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace slopes {

namespace {

// Sup of |values| in the level-1 series: offsets reach 2g-1 (resp. floor(x/k))
// and the unit fraction adds at most 1.
i64 series_bound(const SlopeSetDescriptor& desc) {
  switch (desc.kind()) {
    case SlopeSetDescriptor::Kind::mg: return 2 * desc.g();
    case SlopeSetDescriptor::Kind::mx: return desc.x() / desc.k() + 1;
    default:
      throw std::invalid_argument("gap certificates are defined for the union sets Mg / Mx");
  }
}

// All accumulation points m/n with 1 <= n < cutoff, as reduced rationals.
std::vector<Rational> all_limit_points(const SlopeSetDescriptor& desc, i64 cutoff) {
  std::set<Rational> pts;
  for (i64 n = 1; n < cutoff; ++n)
    for (i64 m : series_offsets(desc)) pts.insert(Rational(m, n));
  return {pts.begin(), pts.end()};
}

std::vector<Rational> limit_points_inside(const std::vector<Rational>& pts,
                                          const RationalInterval& interval) {
  std::vector<Rational> out;
  for (const Rational& p : pts)
    if (interval.contains(p)) out.push_back(p);
  return out;
}

// Largest open gap between consecutive cut points inside (lo, hi); ties go to
// the leftmost gap.
RationalInterval largest_gap(const Rational& lo, const Rational& hi,
                             const std::vector<Rational>& cuts) {
  Rational best_lo = lo, best_hi = hi;
  Rational prev = lo;
  Rational best_width(-1);
  auto consider = [&](const Rational& a, const Rational& b) {
    if (b <= a) return;
    if (b - a > best_width) {
      best_width = b - a;
      best_lo = a;
      best_hi = b;
    }
  };
  for (const Rational& c : cuts) {
    consider(prev, c);
    prev = c;
  }
  consider(prev, hi);
  return RationalInterval::open(best_lo, best_hi);
}

// Exact, finite enumeration of the set members inside an interval that keeps
// positive distance from every accumulation point of levels < cutoff.
// A level-n member sits at distance 1/(n*|t|) from its base point, so
// |t| <= 1/(n * dist) bounds the scan; integers are checked directly.
std::vector<Rational> members_inside(const SlopeSetDescriptor& desc, i64 cutoff,
                                     const RationalInterval& interval) {
  std::set<Rational> members;
  for (i64 z = interval.lo().value().ceil(); z <= interval.hi().value().floor(); ++z)
    if (interval.contains(Rational(z))) members.insert(Rational(z));
  for (i64 n = 1; n < cutoff; ++n) {
    for (i64 m : series_offsets(desc)) {
      Rational base(m, n);
      Rational dist = interval.distance_to(base);
      if (dist.is_zero())
        throw std::logic_error("member enumeration requires clearance from limit points");
      i64 t_cap = (Rational(1) / (Rational(n) * dist)).ceil();
      for (i64 t = -t_cap; t <= t_cap; ++t) {
        if (t == 0) continue;
        Rational v = base + Rational::from_i128(1, i128(n) * t);
        if (interval.contains(v)) members.insert(v);
      }
    }
  }
  return {members.begin(), members.end()};
}

// bound = max over levels n < cutoff of n * ceil(1/(n*d)): any level-n member
// inside an interval at distance >= d from every base point has |t| <=
// 1/(n*d), hence reduced denominator at most n*|t|.
i64 denominator_bound(i64 cutoff, const Rational& min_dist) {
  i64 bound = 1;
  for (i64 n = 1; n < cutoff; ++n) {
    i64 t_cap = (Rational(1) / (Rational(n) * min_dist)).ceil();
    bound = std::max(bound, n * t_cap);
  }
  return bound;
}

Rational min_distance(const RationalInterval& interval, const std::vector<Rational>& points) {
  Rational best(0);
  bool first = true;
  for (const Rational& p : points) {
    Rational d = interval.distance_to(p);
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  if (first) return Rational(1);  // no points at all; any positive value works
  return best;
}

}  // namespace

GapCertificate gap_certificate(const SlopeSetDescriptor& desc, const RationalInterval& query) {
  const i64 B = series_bound(desc);
  if (!query.bounded()) throw std::domain_error("gap query interval must be bounded");
  if (!query.lo_open() || !query.hi_open())
    throw std::domain_error("gap query interval must be open");
  Rational dist0 = query.distance_to_zero();
  if (dist0.is_zero())
    throw std::domain_error("gap query interval must keep positive distance from 0");

  // (i) Levels n >= cutoff live inside [-B/n, B/n], disjoint from the query.
  const i64 cutoff = (Rational(B) / dist0).floor() + 1;

  // (ii) The finitely many accumulation points of the remaining levels.
  const std::vector<Rational> lp_all = all_limit_points(desc, cutoff);
  const std::vector<Rational> lp_in = limit_points_inside(lp_all, query);

  // (iii) Work inside the middle third of the widest accumulation-free gap,
  // then return the widest member-free gap in there.
  RationalInterval free_gap = largest_gap(query.lo().value(), query.hi().value(), lp_in);
  Rational sixth = free_gap.width() / Rational(6);
  Rational mid = free_gap.midpoint();
  RationalInterval working = RationalInterval::open(mid - sixth, mid + sixth);

  std::vector<Rational> members = members_inside(desc, cutoff, working);
  RationalInterval certified =
      largest_gap(working.lo().value(), working.hi().value(), members);

  Rational d = min_distance(certified, lp_all);
  GapCertificate cert;
  cert.query_interval = query;
  cert.cutoff_n = cutoff;
  cert.limit_points = lp_in;
  cert.certified_interval = certified;
  cert.verification_denominator_bound = denominator_bound(cutoff, d);
  return cert;
}

CertificateCheck verify_certificate(const SlopeSetDescriptor& desc, const GapCertificate& cert) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  i64 B;
  try {
    B = series_bound(desc);
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  }
  if (cert.cutoff_n < 1) return fail("cutoff must be at least 1");
  if (cert.verification_denominator_bound < 1) return fail("denominator bound must be >= 1");
  if (!cert.query_interval.bounded() || !cert.certified_interval.bounded())
    return fail("certificate intervals must be bounded");
  if (!cert.query_interval.contains_interval(cert.certified_interval))
    return fail("certified interval escapes the query interval");
  if (cert.certified_interval.lo().value() >= cert.certified_interval.hi().value())
    return fail("certified interval is empty");
  if (cert.certified_interval.contains(Rational(0)))
    return fail("certified interval contains 0");

  // Step (i): the tail band [-B/N, B/N] must miss the query.
  RationalInterval tail_band = RationalInterval::closed(
      -Rational(B, cert.cutoff_n), Rational(B, cert.cutoff_n));
  if (tail_band.intersects(cert.query_interval))
    return fail("cutoff too small: deep levels still reach the query interval");

  // Step (ii): the stored accumulation points must be exactly the ones the
  // cutoff dictates.
  std::vector<Rational> lp_all = all_limit_points(desc, cert.cutoff_n);
  if (limit_points_inside(lp_all, cert.query_interval) != cert.limit_points)
    return fail("stored limit points disagree with the cutoff");

  // The certified interval must keep positive distance from every
  // accumulation point, and the stored denominator bound must dominate the
  // one the distance dictates.
  Rational d = min_distance(cert.certified_interval, lp_all);
  if (cert.cutoff_n > 1 && d.is_zero())
    return fail("certified interval touches an accumulation point");
  if (cert.verification_denominator_bound < denominator_bound(cert.cutoff_n, d))
    return fail("denominator bound below the value the gap distance requires");

  // Step (iii): the bounded sweep must find no member inside.
  EnumerationWindow w{cert.certified_interval, cert.verification_denominator_bound,
                      cert.cutoff_n - 1};
  std::vector<Slope> found = enumerate_set(desc, w);
  if (!found.empty())
    return fail("member " + found.front().str() + " lies in the certified interval");
  return CertificateCheck{true, {}};
}

std::string serialize_certificate(const SlopeSetDescriptor& desc, const GapCertificate& cert) {
  std::ostringstream out;
  out << "format=gap-certificate-v1\n";
  out << "set=" << desc.str() << "\n";
  out << "query=" << cert.query_interval.str() << "\n";
  out << "cutoff_n=" << cert.cutoff_n << "\n";
  out << "limit_points=";
  for (size_t i = 0; i < cert.limit_points.size(); ++i) {
    if (i) out << ",";
    out << cert.limit_points[i].str();
  }
  out << "\n";
  out << "certified=" << cert.certified_interval.str() << "\n";
  out << "denominator_bound=" << cert.verification_denominator_bound << "\n";
  return out.str();
}

std::pair<SlopeSetDescriptor, GapCertificate> parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::string, std::string>> fields;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw parse_error("certificate line without '=': '" + line + "'");
    fields.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  auto get = [&](const std::string& key) -> const std::string& {
    for (const auto& [k, v] : fields)
      if (k == key) return v;
    throw parse_error("certificate is missing field '" + key + "'");
  };
  if (get("format") != "gap-certificate-v1")
    throw parse_error("unknown certificate format '" + get("format") + "'");
  SlopeSetDescriptor desc = SlopeSetDescriptor::parse(get("set"));
  GapCertificate cert;
  cert.query_interval = RationalInterval::parse(get("query"));
  Rational cutoff = Rational::parse(get("cutoff_n"));
  Rational bound = Rational::parse(get("denominator_bound"));
  if (!cutoff.is_integer() || !bound.is_integer())
    throw parse_error("certificate counters must be integers");
  cert.cutoff_n = cutoff.num();
  cert.verification_denominator_bound = bound.num();
  cert.certified_interval = RationalInterval::parse(get("certified"));
  const std::string& lp = get("limit_points");
  size_t pos = 0;
  while (pos < lp.size()) {
    size_t comma = lp.find(',', pos);
    if (comma == std::string::npos) comma = lp.size();
    cert.limit_points.push_back(Rational::parse(lp.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return {desc, cert};
}

BoundaryFilterReport boundary_filter_report(const FillingContext& ctx, const EnumerationWindow& w) {
  if (ctx.x < 1) throw std::domain_error("boundary filter needs Thurston norm x >= 1");
  BoundaryFilterReport report;
  report.band_radius = Rational(ctx.x, ctx.k) + Rational(1);
  SlopeSetDescriptor desc = SlopeSetDescriptor::mx(ctx.x, ctx.k);
  for (const Slope& s : enumerate_set(desc, w)) {
    if (s.value().abs() <= report.band_radius) {
      ++report.inside_count;
    } else {
      ++report.outside_count;
      report.outside.push_back(s);
      if (!s.is_integral()) report.violations.push_back(s);
    }
  }
  return report;
}

}  // namespace slopes
