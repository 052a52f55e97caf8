#include "slopes/knots.hpp"

#include <stdexcept>

#include "slopes/euler.hpp"

namespace slopes {

namespace {

void require_genus(i64 g) {
  if (g < 1) throw std::invalid_argument("knot genus must be >= 1");
}

}  // namespace

KnotDescriptor KnotDescriptor::figure_eight() {
  KnotDescriptor k;
  k.family_ = KnotFamily::figure_eight;
  k.genus_ = 1;
  return k;
}

KnotDescriptor KnotDescriptor::alternating_nonplanar(i64 genus) {
  require_genus(genus);
  KnotDescriptor k;
  k.family_ = KnotFamily::alternating_nonplanar;
  k.genus_ = genus;
  return k;
}

KnotDescriptor KnotDescriptor::alternating_positive_planar(i64 genus) {
  require_genus(genus);
  KnotDescriptor k;
  k.family_ = KnotFamily::alternating_positive_planar;
  k.genus_ = genus;
  return k;
}

KnotDescriptor KnotDescriptor::alternating_negative_planar(i64 genus) {
  require_genus(genus);
  KnotDescriptor k;
  k.family_ = KnotFamily::alternating_negative_planar;
  k.genus_ = genus;
  return k;
}

KnotDescriptor KnotDescriptor::two_bridge_hyperbolic(i64 genus) {
  require_genus(genus);
  KnotDescriptor k;
  k.family_ = KnotFamily::two_bridge_hyperbolic;
  k.genus_ = genus;
  return k;
}

KnotDescriptor KnotDescriptor::fibered_hyperbolic(Degeneracy d, i64 genus) {
  require_genus(genus);
  KnotDescriptor k;
  k.family_ = KnotFamily::fibered_hyperbolic;
  k.genus_ = genus;
  k.degeneracy_ = d;
  return k;
}

KnotDescriptor KnotDescriptor::general_s3(i64 genus, const RationalInterval& interval) {
  require_genus(genus);
  if (!interval.contains(Rational(0)))
    throw std::invalid_argument("a general knot's detection interval must contain 0");
  KnotDescriptor k;
  k.family_ = KnotFamily::general_s3;
  k.genus_ = genus;
  k.interval_ = interval;
  return k;
}

Degeneracy KnotDescriptor::degeneracy() const {
  if (!degeneracy_) throw std::domain_error("degeneracy applies to fibered knots only");
  return *degeneracy_;
}

const RationalInterval& KnotDescriptor::stored_interval() const {
  if (!interval_) throw std::domain_error("only general knots store an interval");
  return *interval_;
}

std::string KnotDescriptor::str() const {
  switch (family_) {
    case KnotFamily::figure_eight: return "fig8";
    case KnotFamily::alternating_nonplanar:
      return "alt:nonplanar:g=" + std::to_string(genus_);
    case KnotFamily::alternating_positive_planar:
      return "alt:posplanar:g=" + std::to_string(genus_);
    case KnotFamily::alternating_negative_planar:
      return "alt:negplanar:g=" + std::to_string(genus_);
    case KnotFamily::two_bridge_hyperbolic:
      return "twobridge:g=" + std::to_string(genus_);
    case KnotFamily::fibered_hyperbolic: {
      const char* d = *degeneracy_ == Degeneracy::negative   ? "neg"
                      : *degeneracy_ == Degeneracy::positive ? "pos"
                                                             : "meridional";
      return std::string("fibered:") + d + ":g=" + std::to_string(genus_);
    }
    case KnotFamily::general_s3:
      return "general:g=" + std::to_string(genus_) + ":interval=" + interval_->str();
  }
  throw std::logic_error("unreachable");
}

namespace {

i64 parse_genus_field(std::string_view field) {
  if (field.substr(0, 2) != "g=")
    throw parse_error("expected g=<genus>, got '" + std::string(field) + "'");
  Rational g = Rational::parse(field.substr(2));
  if (!g.is_integer()) throw parse_error("genus must be an integer");
  return g.num();
}

}  // namespace

KnotDescriptor KnotDescriptor::parse(std::string_view text) {
  try {
    if (text == "fig8") return figure_eight();
    std::vector<std::string_view> parts;
    while (!text.empty()) {
      auto colon = text.find(':');
      parts.push_back(text.substr(0, colon));
      text = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    }
    if (parts.empty()) throw parse_error("empty knot descriptor");
    if (parts[0] == "alt" && parts.size() == 3) {
      i64 g = parse_genus_field(parts[2]);
      if (parts[1] == "nonplanar") return alternating_nonplanar(g);
      if (parts[1] == "posplanar") return alternating_positive_planar(g);
      if (parts[1] == "negplanar") return alternating_negative_planar(g);
      throw parse_error("unknown alternating variant '" + std::string(parts[1]) + "'");
    }
    if (parts[0] == "twobridge" && parts.size() == 2)
      return two_bridge_hyperbolic(parse_genus_field(parts[1]));
    if (parts[0] == "fibered" && parts.size() == 3) {
      i64 g = parse_genus_field(parts[2]);
      if (parts[1] == "neg" || parts[1] == "negative")
        return fibered_hyperbolic(Degeneracy::negative, g);
      if (parts[1] == "pos" || parts[1] == "positive")
        return fibered_hyperbolic(Degeneracy::positive, g);
      if (parts[1] == "meridional" || parts[1] == "mer")
        return fibered_hyperbolic(Degeneracy::meridional, g);
      throw parse_error("unknown degeneracy '" + std::string(parts[1]) + "'");
    }
    if (parts[0] == "general" && parts.size() == 3) {
      i64 g = parse_genus_field(parts[1]);
      if (parts[2].substr(0, 9) != "interval=")
        throw parse_error("expected interval=(a,b)");
      return general_s3(g, RationalInterval::parse(parts[2].substr(9)));
    }
    throw parse_error("unknown knot descriptor '" + std::string(parts[0]) + "'");
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("invalid knot descriptor: ") + e.what());
  }
}

RationalInterval foliation_interval(const KnotDescriptor& knot) {
  auto ray_above = [](i64 a) {
    return RationalInterval::make(ExtendedRational::finite(Rational(a)),
                                  ExtendedRational::pos_inf(), true, true);
  };
  auto ray_below = [](i64 b) {
    return RationalInterval::make(ExtendedRational::neg_inf(),
                                  ExtendedRational::finite(Rational(b)), true, true);
  };
  switch (knot.family()) {
    case KnotFamily::alternating_positive_planar: return ray_above(0);
    case KnotFamily::alternating_negative_planar: return ray_below(0);
    case KnotFamily::alternating_nonplanar:
    case KnotFamily::two_bridge_hyperbolic:
    case KnotFamily::figure_eight:
      return RationalInterval::whole_line();
    case KnotFamily::fibered_hyperbolic:
      switch (knot.degeneracy()) {
        case Degeneracy::negative: return ray_above(-1);
        case Degeneracy::positive: return ray_below(1);
        case Degeneracy::meridional: return RationalInterval::whole_line();
      }
      throw std::logic_error("unreachable");
    case KnotFamily::general_s3: return knot.stored_interval();
  }
  throw std::logic_error("unreachable");
}

Verdict lo_verdict(const KnotDescriptor& knot, const Slope& s) {
  if (s.is_meridian())
    throw std::domain_error("verdicts are defined for finite slopes only");
  Verdict v;
  v.slope = s;
  RationalInterval detected = foliation_interval(knot);
  v.foliation_detected = detected.contains(s.value());
  v.provenance.push_back("detection-interval[" + knot.str() + "]=" + detected.str());
  // Slope 0 fails the congruence's p > 0 hypothesis and the L sets exclude it.
  v.euler_zero = !s.is_longitude() && branched_surface_vanishing(knot.genus(), s);
  v.provenance.push_back("euler-class-congruence[(2g-1)|q|=1 mod p, g=" +
                         std::to_string(knot.genus()) + "]=" +
                         (v.euler_zero ? "zero" : "nonzero"));
  v.lo_detected = v.foliation_detected && v.euler_zero;
  if (v.lo_detected)
    v.provenance.push_back(
        "universal-circle[taut foliation with zero Euler class => left-orderable]");
  return v;
}

std::vector<Slope> lo_slopes(const KnotDescriptor& knot, const EnumerationWindow& w) {
  SlopeSetDescriptor lset = knot.genus() == 1 ? SlopeSetDescriptor::l1()
                                              : SlopeSetDescriptor::lg(knot.genus());
  RationalInterval detected = foliation_interval(knot);
  std::vector<Slope> out;
  for (const Slope& s : enumerate_set(lset, w))
    if (detected.contains(s.value())) out.push_back(s);
  return out;
}

}  // namespace slopes
