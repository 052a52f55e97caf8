#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slopes/euler.hpp"
#include "slopes/slope_sets.hpp"

namespace slopes {

// Finitely verifiable witness that a rational subinterval misses one of the
// union sets Mg / Mx. The construction has three steps:
//   (i)   pick cutoff_n so every level >= cutoff_n stays inside
//         [-B/cutoff_n, B/cutoff_n], which misses the query interval
//         (B = 2g for Mg, floor(x/k)+1 for Mx);
//   (ii)  list the finitely many accumulation points m/n, n < cutoff_n,
//         inside the query;
//   (iii) select a subinterval clear of those points, enumerate its finitely
//         many set members, and hand back a gap between consecutive members.
// Verification needs only a bounded denominator sweep.
struct GapCertificate {
  RationalInterval query_interval;
  i64 cutoff_n = 1;
  std::vector<Rational> limit_points;  // accumulation points inside the query
  RationalInterval certified_interval;
  i64 verification_denominator_bound = 1;

  friend bool operator==(const GapCertificate&, const GapCertificate&) = default;
};

// Builds a certificate for a bounded open query interval with positive
// distance from 0. Deterministic: the same query yields the same certificate.
// Throws std::domain_error when the query touches 0 or is unbounded, and
// std::invalid_argument for descriptors other than Mg / Mx.
GapCertificate gap_certificate(const SlopeSetDescriptor& desc, const RationalInterval& query);

struct CertificateCheck {
  bool ok = false;
  std::string reason;  // empty on success
};

// Re-derives every bound in the certificate and enumerates the set inside the
// certified interval up to the stored denominator bound. Never throws on a
// bad certificate; returns false with a reason.
CertificateCheck verify_certificate(const SlopeSetDescriptor& desc, const GapCertificate& cert);

// Canonical structured text, one field per line, exact fractions throughout.
std::string serialize_certificate(const SlopeSetDescriptor& desc, const GapCertificate& cert);
std::pair<SlopeSetDescriptor, GapCertificate> parse_certificate(const std::string& text);

// Enumerates Mx(x,k) over the window and partitions members against the band
// [-x/k-1, x/k+1]: everything outside must be integral.
struct BoundaryFilterReport {
  Rational band_radius;  // x/k + 1
  i64 inside_count = 0;
  i64 outside_count = 0;
  std::vector<Slope> outside;
  std::vector<Slope> violations;  // non-integral members outside the band
  bool ok() const { return violations.empty(); }
};

BoundaryFilterReport boundary_filter_report(const FillingContext& ctx, const EnumerationWindow& w);

}  // namespace slopes
