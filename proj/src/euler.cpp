#include "slopes/euler.hpp"

#include <algorithm>
#include <stdexcept>

namespace slopes {

RelEulerData::RelEulerData(i64 a_, i64 b_) : a(a_), b(b_) {
  if (b != 1 && b != -1)
    throw std::invalid_argument("meridian-disk evaluation b must be +1 or -1");
}

FillingContext FillingContext::general(i64 k, i64 x, Condition1 c1) {
  if (k < 1) throw std::invalid_argument("longitude order k must be >= 1");
  if (x < 0) throw std::invalid_argument("Thurston norm x must be >= 0");
  return FillingContext{k, x, c1, false};
}

FillingContext FillingContext::integer_homology(i64 x) {
  FillingContext ctx = general(1, x, Condition1::holds);
  ctx.integer_homology_solid_torus = true;
  return ctx;
}

FillingContext FillingContext::from_genus(i64 g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  return integer_homology(2 * g - 1);
}

namespace {

i64 mod_p(i128 v, i64 p) {
  i128 r = v % p;
  if (r < 0) r += p;
  return static_cast<i64>(r);
}

}  // namespace

i64 obstruction_residue(const RelEulerData& rel, const FillingContext& ctx, const Slope& s) {
  if (s.p() == 0) throw std::domain_error("criterion undefined for the longitude");
  if (rel.a % ctx.k != 0)
    throw std::domain_error("relative class not divisible by longitude order");
  i64 a_prime = rel.a / ctx.k;
  return mod_p(i128(a_prime) * s.q() - rel.b, s.p());
}

bool vanishing_necessary(const RelEulerData& rel, const FillingContext& ctx, const Slope& s) {
  if (s.p() == 0) throw std::domain_error("criterion undefined for the longitude");
  if (ctx.euler_condition_1 == Condition1::fails) return false;
  if (rel.a % ctx.k != 0) return false;
  return obstruction_residue(rel, ctx, s) == 0;
}

Vanishing vanishing_iff(const RelEulerData& rel, const FillingContext& ctx, const Slope& s) {
  if (!vanishing_necessary(rel, ctx, s)) return Vanishing::nonzero;
  if (ctx.k == 1 && ctx.euler_condition_1 == Condition1::holds) return Vanishing::zero;
  return Vanishing::undetermined;
}

std::vector<i64> admissible_a(const FillingContext& ctx) {
  std::vector<i64> out;
  for (i64 a = -ctx.x; a <= ctx.x; ++a)
    if ((a - ctx.x) % 2 == 0 && a % ctx.k == 0) out.push_back(a);
  return out;
}

bool slope_potentially_vanishing(const FillingContext& ctx, const Slope& s) {
  if (s.p() == 0) throw std::domain_error("criterion undefined for the longitude");
  for (i64 a : admissible_a(ctx)) {
    i64 a_prime = a / ctx.k;
    i64 r = mod_p(i128(a_prime) * s.q(), s.p());
    if (r == mod_p(1, s.p()) || r == mod_p(-1, s.p())) return true;
  }
  return false;
}

std::optional<i64> meridian_obstruction(const FillingContext& ctx, const Slope& s) {
  if (s.p() == 0) throw std::domain_error("criterion undefined for the longitude");
  if (s.q() == 0) throw std::domain_error("criterion undefined for the meridian");
  const i64 p = s.p();
  const i64 q = s.q();
  // |q + n*p| * (x + k) < p * k, so only finitely many n are candidates.
  // gcd(p, q+np) = 1, hence the rewritten slope is integral iff |q+np| = 1.
  const Rational threshold = Rational(p) * Rational(ctx.k) / Rational(ctx.x + ctx.k);
  const i64 lo = ((-threshold - Rational(q)) / Rational(p)).floor();
  const i64 hi = ((threshold - Rational(q)) / Rational(p)).ceil();
  std::optional<i64> best;
  for (i64 n = lo; n <= hi; ++n) {
    i128 t = i128(q) + i128(n) * p;
    if (t == 0) continue;
    i128 abs_t = t < 0 ? -t : t;
    if (abs_t <= 1) continue;  // integral after the change
    if (Rational(static_cast<i64>(abs_t)) * Rational(ctx.x + ctx.k) >=
        Rational(p) * Rational(ctx.k))
      continue;
    if (!best || std::abs(n) < std::abs(*best) ||
        (std::abs(n) == std::abs(*best) && n < *best))
      best = n;
  }
  return best;
}

bool sufficient_integral(const Slope& s, const RelEulerData& rel) {
  if (s.is_longitude()) throw std::domain_error("criterion undefined for the longitude");
  if (!s.is_integral()) throw std::domain_error("criterion stated for integral slopes only");
  // Slope sign is the sign of q since p > 0.
  return (s.q() > 0 && rel.a == 1) || (s.q() < 0 && rel.a == -1);
}

bool branched_surface_vanishing(i64 g, const Slope& s) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  if (s.p() == 0) throw std::domain_error("criterion undefined for the longitude");
  if (s.is_meridian()) throw std::domain_error("criterion undefined for the meridian");
  i64 abs_q = s.q() < 0 ? -s.q() : s.q();
  return mod_p(i128(2 * g - 1) * abs_q - 1, s.p()) == 0;
}

AbelianGroup::AbelianGroup(std::vector<i64> factors, i64 rank_)
    : rank(rank_), invariant_factors(std::move(factors)) {
  if (rank < 0) throw std::invalid_argument("rank must be >= 0");
  for (size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] < 2)
      throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

bool z2_forces_zero(const AbelianGroup& h2) {
  if (h2.rank != 0) return false;
  return std::all_of(h2.invariant_factors.begin(), h2.invariant_factors.end(),
                     [](i64 d) { return d == 2; });
}

bool thurston_zero_guard(const FillingContext& ctx) { return ctx.x == 0; }

}  // namespace slopes
