#pragma once

#include <variant>
#include <vector>

#include "sfpoly/linalg.hpp"
#include "sfpoly/polytope.hpp"

namespace sfpoly {

/// Optimum of the pairing over a polytope and the face attaining it.
struct SupportEvaluation {
  Rational value;
  Face attaining_face;
};

/// c(a) = min { <c, a> : c in P }.
SupportEvaluation support_min(const Polytope& p, const ExactVector& a);

/// Geometric sutured function: y_t(a) = -c(a).  The trivialization only
/// enters through which translate of the polytope is passed in.
Rational y_t(const Polytope& p, const ExactVector& a);

/// Raised when a seminorm that needs a centered polytope gets an uncentered one.
class NotCentered : public DomainError {
 public:
  explicit NotCentered(const ExactCovector& centroid)
      : DomainError("polytope is not centered: vertex centroid is " + centroid.str()) {}
};

/// y(a) = max { <-c, a> : c vertex of P }, P centered at its vertex centroid.
Rational y_seminorm(const Polytope& p_centered, const ExactVector& a);

/// z(a) = (y(a) + y(-a)) / 2.
Rational z_symmetrized(const Polytope& p_centered, const ExactVector& a);

using BallPolytope = BasicPolytope<HomologyTag>;

/// Unit ball {a : <c, a> <= 1 for every vertex c} of a centered polytope: the
/// polar dual.  A lower-dimensional polytope gives an unbounded ball, kept as
/// its halfspace list.  Facets of the ball correspond one-to-one to vertices of
/// P, and the cone over the facet of vertex c is the dual cone at c.  The ball
/// is the unit ball of a -> y(-a).
struct NormBall {
  struct Halfspaces {
    std::vector<ExactCovector> normals;  // {a : <n, a> <= 1}
  };
  std::variant<BallPolytope, Halfspaces> representation;

  bool bounded() const { return std::holds_alternative<BallPolytope>(representation); }
  const BallPolytope& polytope() const { return std::get<BallPolytope>(representation); }
  const Halfspaces& halfspaces() const { return std::get<Halfspaces>(representation); }
  bool contains(const ExactVector& a) const;
};

NormBall unit_ball(const Polytope& p_centered);

/// Per-component surface data: Euler characteristic, number of suture
/// intersections n(S_i), and number of intersections with a 1-complex beta.
struct SurfaceComponent {
  long euler = 0;
  long suture_count = 0;
  long beta_count = 0;
};

struct SurfaceComplexityData {
  std::vector<SurfaceComponent> components;
};

/// Thurston complexity: sum max(0, -chi).
long chi_minus(const SurfaceComplexityData& s);
/// sum max(0, -chi + |S_i cap beta|).
long chi_beta(const SurfaceComplexityData& s);
/// Sutured complexity: sum max(0, -chi + n/2).
Rational chi_s_minus(const SurfaceComplexityData& s);

struct TrivializationSummand {
  long euler = 0;
  Rational index_sum;
  long rotation_sum = 0;
};

/// c(S, t) = chi(S) + I(S) - r(S, t).
Rational c_S_t(const TrivializationSummand& t);

/// I(T) = -k/2 for a surface meeting the sutures in k points.
Rational index_from_suture_count(long k);

}  // namespace sfpoly
