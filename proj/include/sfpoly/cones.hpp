#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sfpoly/linalg.hpp"
#include "sfpoly/polytope.hpp"

namespace sfpoly {

namespace detail {
struct RawCone;
}

/// Closed polyhedral cone in H_2, kept in both representations:
///   cone(generators) == {x : <h, x> >= 0 for every h in halfspaces}.
///
/// Generators are primitive and no two are positive multiples.  A lineality space
/// shows up as opposite generator pairs (l, -l); an equality <e, x> = 0 shows up
/// as the halfspace pair (e, -e).  The open cone is the interior.
class PolyhedralCone {
 public:
  PolyhedralCone() = default;

  static PolyhedralCone from_halfspaces(const std::vector<ExactCovector>& halfspaces,
                                        std::size_t dim, std::size_t label = 0);
  static PolyhedralCone from_generators(const std::vector<ExactVector>& generators,
                                        std::size_t dim, std::size_t label = 0);

  const std::vector<ExactVector>& generators() const { return generators_; }
  const std::vector<ExactCovector>& halfspaces() const { return halfspaces_; }
  /// Primitive basis of the lineality space (empty for a pointed cone).
  const std::vector<ExactVector>& lineality() const { return lineality_; }
  bool pointed() const { return lineality_.empty(); }
  std::size_t dim() const { return dim_; }
  /// Index of the source polytope vertex.
  std::size_t label() const { return label_; }

  friend bool operator==(const PolyhedralCone&, const PolyhedralCone&) = default;

 private:
  static PolyhedralCone from_raw(const detail::RawCone& raw, std::size_t label);

  std::vector<ExactVector> generators_;
  std::vector<ExactCovector> halfspaces_;
  std::vector<ExactVector> lineality_;
  std::size_t dim_ = 0;
  std::size_t label_ = 0;
};

/// Irredundant primitive generators, sorted.
std::vector<ExactVector> extremal_rays(const PolyhedralCone& c);

enum class Membership { interior, boundary, outside };
const char* to_string(Membership m);

/// Exact sign test against the halfspace description.
Membership membership(const PolyhedralCone& c, const ExactVector& a);

/// One closed cone per polytope vertex: cone i is {a : <v_i - v_j, a> >= 0 for all j},
/// the functionals maximized at v_i.
struct DualConeSystem {
  std::vector<PolyhedralCone> cones;
  Polytope source;
};

DualConeSystem dual_cones(const Polytope& p);

/// Unique strict maximizer of <., a> over the vertices; nullopt on ties.
std::optional<std::size_t> extremal_vertex_for(const Polytope& p, const ExactVector& a);

/// Dual cones whose vertex carries a group isomorphic to Z.
struct FoliationConeSet {
  std::vector<PolyhedralCone> cones;
  DualConeSystem system;
};

/// Hull of the support, its dual cones, and the subset at (rank 1, Z) vertices.
/// Labels at non-vertex support points are ignored.
FoliationConeSet foliation_cones(const LabeledSupport& ls);

struct FanCheckOptions {
  std::uint64_t seed = 20100;
  std::size_t samples = 10000;
  long bound = 100;  // sample coordinates are integers in [-bound, bound]
  std::size_t max_witnesses = 8;
};

struct FanReport {
  bool covers = false;
  bool disjoint = false;
  /// Exact wall-matching completeness check; present when ambient dim <= 3.
  std::optional<bool> exact_cover;
  bool lineality = false;  // some cone is not pointed
  std::size_t samples = 0;
  std::size_t strict_samples = 0;  // samples with a unique maximizing vertex
  std::vector<ExactVector> witnesses;
};

/// Checks that the closed cones cover H_2 and that their interiors are
/// pairwise disjoint.  Covering requires a full-dimensional source (or a single
/// vertex); sampling then checks that every sample with a strict maximizer lies
/// in exactly that vertex's open cone.
FanReport fan_check(const DualConeSystem& sys, const FanCheckOptions& options = {});

}  // namespace sfpoly
