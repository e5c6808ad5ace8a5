#include "sfpoly/norms.hpp"

#include <algorithm>

namespace sfpoly {

SupportEvaluation support_min(const Polytope& p, const ExactVector& a) {
  if (a.dim() != p.ambient_dim()) throw DimensionMismatch(p.ambient_dim(), a.dim());
  Face face = face_in_direction(p, a, Sense::minimize);
  const Rational value = pairing(p.vertex(face.vertex_indices.front()), a);
  return {value, std::move(face)};
}

Rational y_t(const Polytope& p, const ExactVector& a) { return -support_min(p, a).value; }

namespace {

void require_centered(const Polytope& p) {
  const ExactCovector c = vertex_centroid(p);
  if (!c.is_zero()) throw NotCentered(c);
}

Rational y_unchecked(const Polytope& p, const ExactVector& a) {
  std::optional<Rational> best;
  for (const auto& c : p.vertices()) {
    const Rational v = -pairing(c, a);
    if (!best || v > *best) best = v;
  }
  return *best;
}

}  // namespace

Rational y_seminorm(const Polytope& p_centered, const ExactVector& a) {
  if (a.dim() != p_centered.ambient_dim()) throw DimensionMismatch(p_centered.ambient_dim(), a.dim());
  require_centered(p_centered);
  return y_unchecked(p_centered, a);
}

Rational z_symmetrized(const Polytope& p_centered, const ExactVector& a) {
  if (a.dim() != p_centered.ambient_dim()) throw DimensionMismatch(p_centered.ambient_dim(), a.dim());
  require_centered(p_centered);
  return (y_unchecked(p_centered, a) + y_unchecked(p_centered, -a)) * Rational(BigInt(1), BigInt(2));
}

bool NormBall::contains(const ExactVector& a) const {
  if (bounded()) {
    const auto& ball = polytope();
    if (a.dim() != ball.ambient_dim()) throw DimensionMismatch(ball.ambient_dim(), a.dim());
    // Inside iff every facet inequality holds.
    for (const auto& f : facets(ball))
      if (evaluate(f.outward_normal, a) > f.offset) return false;
    return true;
  }
  for (const auto& n : halfspaces().normals)
    if (pairing(n, a) > 1) return false;
  return true;
}

NormBall unit_ball(const Polytope& p_centered) {
  const ExactCovector c = vertex_centroid(p_centered);
  if (!c.is_zero()) throw NotCentered(c);
  if (!p_centered.full_dimensional()) {
    return NormBall{NormBall::Halfspaces{p_centered.vertices()}};
  }
  // Facet <x, n> <= b of P (b > 0 with 0 interior) gives the ball vertex n / b.
  std::vector<ExactVector> verts;
  for (const auto& f : facets(p_centered)) {
    verts.push_back(f.outward_normal * (Rational(1) / f.offset));
  }
  return NormBall{convex_hull(verts)};
}

long chi_minus(const SurfaceComplexityData& s) {
  long total = 0;
  for (const auto& c : s.components) total += std::max(0L, -c.euler);
  return total;
}

long chi_beta(const SurfaceComplexityData& s) {
  long total = 0;
  for (const auto& c : s.components) {
    if (c.beta_count < 0) throw DomainError("negative beta intersection count");
    total += std::max(0L, -c.euler + c.beta_count);
  }
  return total;
}

Rational chi_s_minus(const SurfaceComplexityData& s) {
  Rational total;
  for (const auto& c : s.components) {
    if (c.suture_count < 0) throw DomainError("negative suture count");
    const Rational term = Rational(-c.euler) + Rational(BigInt(c.suture_count), BigInt(2));
    if (term.sign() > 0) total += term;
  }
  return total;
}

Rational c_S_t(const TrivializationSummand& t) {
  return Rational(t.euler) + t.index_sum - Rational(t.rotation_sum);
}

Rational index_from_suture_count(long k) {
  if (k < 0) throw DomainError("negative suture count");
  return Rational(BigInt(-k), BigInt(2));
}

}  // namespace sfpoly
